#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sp2g/group.hpp"
#include "sp2g/qmap.hpp"

namespace sp2g {

// Strong-reality verdict for the group of a quadratic map, decided entirely
// on V: the group is strongly real iff every nonzero v admits an a with
// q(a) = q(a - v) = 0. Scans run in the lexicographic order of the printed
// vectors; the witness for each v is the first valid a in that order.
struct SRResult {
    bool strongly_real = false;
    // (v, a) for every witnessed nonzero v, v ascending.
    std::vector<std::pair<F2Vector, F2Vector>> witness;
    // Unwitnessed v, ascending; empty iff strongly_real.
    std::vector<F2Vector> obstructions;

    // Representative obstruction: the lexicographically greatest unwitnessed
    // v (the paper demonstrates its obstructions on that vector).
    std::optional<F2Vector> obstruction() const {
        if (obstructions.empty()) return std::nullopt;
        return obstructions.back();
    }
};
SRResult strongly_real(const QuadraticMap& qm);

enum class TransferVerdict { arf_zero, arf_one, undefined_transfer };

struct TransferDetail {
    F2Vector s;
    TransferVerdict verdict;
    std::optional<bool> arf;  // absent iff the transfer is undefined
};

// Total orthogonality by the Arf criterion: every nonzero functional s must
// yield a defined induced form q_s with Arf(q_s) = 0. An undefined transfer
// counts against total orthogonality and is surfaced distinctly.
struct TOResult {
    bool totally_orthogonal = false;
    std::vector<TransferDetail> transfers;  // s_1, s_2, ... in index order
};
TOResult totally_orthogonal(const QuadraticMap& qm);

struct ClassificationReport {
    QuadraticMap map;
    SRResult sr;
    TOResult to;
    bool gauss_check = false;
    // Agreement with the group-level brute force; present when |G| <= 2^10.
    std::optional<bool> sr_bruteforce_agrees;
};
ClassificationReport classify(const QuadraticMap& qm);

// Every explicit form and map the paper works with, keyed by a stable name.
struct NamedMap {
    std::string name;
    QuadraticMap map;
};
const std::vector<NamedMap>& paper_examples();
const QuadraticMap& paper_example(const std::string& name);

}  // namespace sp2g
