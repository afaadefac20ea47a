#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sp2g/classify.hpp"
#include "sp2g/group.hpp"
#include "sp2g/qmap.hpp"

namespace sp2g {

// The candidate space of quadratic maps V -> W for one (dim V, dim W) split.
// Only regular maps with spanning polar image count; feasibility requires
// dim_w <= dim_v (dim_v - 1) / 2.
struct SearchSpace {
    int dim_v;
    int dim_w;
    bool operator==(const SearchSpace&) const = default;
};

// A map serializes to one integer: the m upper-triangular components
// concatenated, each component laid out with its n diagonal cells first and
// the off-diagonal cells (r, c), r < c, row-major after them. This fixes the
// total order under which canonical representatives are minimal.
int candidate_bits(const SearchSpace& space);
uint64_t encode_map(const QuadraticMap& qm);             // requires bits <= 64
QuadraticMap decode_map(const SearchSpace& space, uint64_t code);

// Canonical label of the orbit of a map under (T, S) in GL(V) x GL(W)
// acting by q -> S ∘ q ∘ T: the lexicographically minimal serialized orbit
// element. Equal keys iff equivalent maps iff isomorphic groups.
struct EquivalenceKey {
    int dim_v = 0;
    int dim_w = 0;
    unsigned __int128 code = 0;

    bool operator==(const EquivalenceKey&) const = default;
    std::string to_hex() const;
};

// Requires dim_v <= 6 and dim_w <= 4; throws std::invalid_argument
// ("orbit budget exceeded") when the orbit walk outgrows its budget.
EquivalenceKey canonical_key(const QuadraticMap& qm);

// One representative per equivalence class of regular spanning maps, in
// ascending order of the serialized code; each representative is the
// minimal element of its orbit. threads = 0 picks the hardware default.
std::vector<uint64_t> enumerate_class_codes(const SearchSpace& space, int threads = 0);
std::vector<QuadraticMap> enumerate_classes(const SearchSpace& space, int threads = 0);

// Cheap orbit invariants (radical dimension, zero count, sorted per-functional
// transfer data), rendered as a string: equal for equivalent maps, so a
// difference certifies inequivalence.
std::string invariant_prekey(const QuadraticMap& qm);

struct ClassEntry {
    int dim_v = 0;
    int dim_w = 0;
    uint64_t code = 0;  // canonical: the minimal serialized orbit element
    QuadraticMap map;
    bool strongly_real = false;
    bool totally_orthogonal = false;
    bool gauss_check = false;
    std::optional<ExtraspecialKind> extraspecial;  // present iff dim_w == 1
    // Group-level brute-force agreement (strong reality and involution
    // count); present when |G| <= 2^10.
    std::optional<bool> cross_check;

    EquivalenceKey key() const {
        return EquivalenceKey{dim_v, dim_w, static_cast<unsigned __int128>(code)};
    }
};

struct SplitSummary {
    int dim_v = 0;
    int dim_w = 0;
    uint64_t candidates = 0;  // 2^candidate_bits
    uint64_t valid = 0;       // regular maps with spanning image
    int classes = 0;
};

// Exhaustive isomorph-free census of the special 2-groups of one order,
// restricted to special 2-groups by construction. A positive budget stops
// before starting any split once the wall clock is exhausted; the report
// then carries exhaustive = false and only the completed splits.
struct SurveyReport {
    uint64_t order = 0;
    bool exhaustive = true;
    std::vector<SplitSummary> splits;
    std::vector<ClassEntry> classes;  // sorted by (dim_v, dim_w, code)
};
SurveyReport survey(uint64_t order, int threads = 0, double budget_seconds = 0);

enum class ClaimStatus { pass, fail, skipped };

struct ClaimResult {
    std::string name;
    ClaimStatus status = ClaimStatus::skipped;
    std::string detail;
};

struct ClaimReport {
    std::vector<ClaimResult> claims;
    bool all_passed() const;  // no failures; skipped claims do not count
};

struct ClaimOptions {
    bool stretch = false;          // also run the order-128 exhaustive survey
    double budget_seconds = 0;     // 0 = no wall-clock budget
    int threads = 0;
};

// Reproduces the survey-level statements: the unique strongly-real but not
// totally-orthogonal classes at orders 32 and 64, the absence of totally
// orthogonal non-strongly-real classes up to order 64, and the existence of
// one at order 128 (by the registered example, or exhaustively in stretch
// mode).
ClaimReport reproduce_claims(const ClaimOptions& options = {});

}  // namespace sp2g
