#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sp2g/qmap.hpp"

namespace sp2g {

// Element (v, w) of the central extension V ×̇ W. The identity is (0, 0).
struct GroupElement {
    F2Vector v, w;
    bool operator==(const GroupElement&) const = default;
};

// The special 2-group encoded by a regular quadratic map with spanning polar
// image, realized on V × W with the bilinear cocycle c(u,v) = (u^t Q_i v)_i
// built from the upper-triangular component matrices. Bilinearity gives the
// normal 2-cocycle identity and c(x,x) = q(x), so squares are (0, q(v)) and
// commutators are (0, b_q(v,v')).
//
// Elements are indexed in serialization order: v bits then w bits, little
// endian, i.e. index = v | (w << dim_v).
class SpecialGroup {
  public:
    // Throws std::invalid_argument("map not regular") or
    // ("image does not span W") when the hypotheses fail.
    static SpecialGroup construct(const QuadraticMap& qm);

    int dim_v() const { return qmap_.dim_v(); }
    int dim_w() const { return qmap_.dim_w(); }
    uint64_t order() const { return uint64_t{1} << (dim_v() + dim_w()); }
    const QuadraticMap& qmap() const { return qmap_; }

    GroupElement identity() const;
    GroupElement element(uint64_t index) const;
    uint64_t index_of(const GroupElement& x) const;

    F2Vector cocycle(const F2Vector& u, const F2Vector& v) const;
    GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
    GroupElement inverse(const GroupElement& x) const;
    // 1, 2 or 4: order 2 iff x != e and q(v) = 0, order 4 iff q(v) = 1.
    int element_order(const GroupElement& x) const;

    // Packed fast path used by the brute-force scans; index layout as above.
    uint64_t multiply_packed(uint64_t x, uint64_t y) const;
    uint64_t inverse_packed(uint64_t x) const;

  private:
    explicit SpecialGroup(QuadraticMap qm) : qmap_(std::move(qm)) {}
    QuadraticMap qmap_;
};

// Enumeration checks of the special-group structure: the center is exactly
// 0 × W, squares realize q, commutators realize b_q, and the derived
// subgroup is 0 × W. Capped at |G| <= 2^16.
struct SpecialCheck {
    bool center_ok = false;
    bool squares_ok = false;
    bool commutators_ok = false;
    bool derived_ok = false;
    bool all() const { return center_ok && squares_ok && commutators_ok && derived_ok; }
};
SpecialCheck verify_special(const SpecialGroup& g);

// The group of the orthogonal sum; requires equal centers (dim_w).
SpecialGroup central_product(const SpecialGroup& g1, const SpecialGroup& g2);

enum class ExtraspecialFamily { d4_power, q2_d4_power };

// D4^(n) or Q2·D4^(n-1), the two extraspecial 2-groups of order 2^(2n+1).
struct ExtraspecialKind {
    int n;
    ExtraspecialFamily family;
    bool operator==(const ExtraspecialKind&) const = default;
};

SpecialGroup extraspecial(const ExtraspecialKind& kind);

// Requires dim_w = 1 and a regular form; the family is decided by the Arf
// invariant (0 for D4^(n), 1 for Q2·D4^(n-1)).
ExtraspecialKind classify_extraspecial(const SpecialGroup& g);

// Brute-force strong reality: for every x, search y with y^2 = 1 and
// y x y^{-1} = x^{-1}, lowest index first. Capped at |G| <= 2^16.
struct GroupRealityReport {
    bool strongly_real = false;
    // witness[i] = index of the chosen y for element i (identity included).
    std::vector<uint64_t> witness;
    // First element index (serialization order) with no witness.
    std::optional<uint64_t> obstruction;
};
GroupRealityReport is_strongly_real_bruteforce(const SpecialGroup& g);

// Brute-force reality: every x conjugate to its inverse. Same cap.
bool is_real_bruteforce(const SpecialGroup& g);

// |{x : x^2 = 1}| = 2^dim_w * |{v : q(v) = 0}|, identity included.
uint64_t involution_count(const SpecialGroup& g);

}  // namespace sp2g
