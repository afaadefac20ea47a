#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "sp2g/f2.hpp"

namespace sp2g {

// Scalar quadratic form q : V -> F2 on an n-dimensional space, stored as the
// unique upper-triangular coefficient matrix: q(x) = x^t Q x with Q[i][j] = 0
// for i > j. Any matrix of the form is accepted on construction; entries
// below the diagonal are folded onto their mirror, so equal forms compare
// bit-equal.
class QuadraticForm {
  public:
    QuadraticForm() = default;
    explicit QuadraticForm(int dim);  // the zero form
    explicit QuadraticForm(const F2Matrix& any_matrix_of_q);

    int dim() const { return coeffs_.rows(); }
    const F2Matrix& coeffs() const { return coeffs_; }
    bool coeff(int i, int j) const { return coeffs_.get(i, j); }
    uint64_t row_bits(int i) const { return coeffs_.row_bits(i); }

    bool operator==(const QuadraticForm& o) const = default;

  private:
    F2Matrix coeffs_;
};

// q(v) = v^t Q v over F2.
bool evaluate(const QuadraticForm& q, const F2Vector& v);

// B = Q + Q^t: alternating (symmetric, zero diagonal), and
// u^t B v = q(u+v) + q(u) + q(v).
F2Matrix polar_matrix(const QuadraticForm& q);

// Basis of rad(V) = ker(polar_matrix(q)); empty iff the form is regular.
std::vector<F2Vector> radical(const QuadraticForm& q);

// q composed with the basis change T: returns the form y -> q(T y), with
// coefficient matrix canon(T^t Q T).
QuadraticForm compose(const QuadraticForm& q, const F2Matrix& t);

// [a_1,b_1] ⊥ ... ⊥ [a_r,b_r] ⊥ <c_1,...,c_s> with 2r + s = dim.
struct NormalForm {
    struct Pair {
        bool a, b;
        bool operator==(const Pair&) const = default;
    };
    std::vector<Pair> pairs;
    std::vector<bool> singular_diag;

    int dim() const { return 2 * static_cast<int>(pairs.size()) +
                             static_cast<int>(singular_diag.size()); }
    // The polynomial sum(a_i x_i^2 + x_i y_i + b_i y_i^2) + sum(c_j z_j^2)
    // evaluated at y = (x_1, y_1, ..., x_r, y_r, z_1, ..., z_s).
    bool evaluate(const F2Vector& y) const;
    QuadraticForm to_form() const;
};

// Decomposition into hyperbolic-ish pairs plus the radical. The transition
// matrix satisfies q(T y) = form(y) for all y; its columns are the new basis
// vectors, pairs first ([v_i w_i] interleaved), radical last. The radical
// values are normalized to <1,0,...,0> or <0,...,0>. Pair extraction picks
// the lowest-index vectors with b(v,w) = 1, so the output is deterministic.
struct Normalization {
    NormalForm form;
    F2Matrix transition;
};
Normalization normalize(const QuadraticForm& q);

// Anisotropic kernel of a form over F2: zero, <1>, or [1,1]. Anything larger
// has a nontrivial zero.
enum class AnisotropicKind { zero, single_one, form_11 };

// q ≅ i x H ⊥ (anisotropic kernel) ⊥ j x <0>.
struct WittDecomposition {
    int hyperbolic_count;
    AnisotropicKind anisotropic_kind;
    int zero_diag_count;
    bool operator==(const WittDecomposition&) const = default;
};
WittDecomposition witt_decompose(const QuadraticForm& q);
QuadraticForm reassemble(const WittDecomposition& w);

// Complete isometry invariant over F2: dimension, radical dimension,
// dimension of rad ∩ q^{-1}(0), and the Arf invariant of the regular part
// when q vanishes on the radical (otherwise the regular part is not an
// invariant and the slot is absent).
struct IsometryInvariant {
    int dim;
    int rad_dim;
    int rad_zero_dim;
    std::optional<bool> arf;
    bool operator==(const IsometryInvariant&) const = default;
};
IsometryInvariant isometry_invariant(const QuadraticForm& q);

// Arf(q) = sum a_i b_i over the normalized pairs. Throws
// std::invalid_argument("form not regular") when the radical is nonzero.
bool arf(const QuadraticForm& q);

bool is_isometric(const QuadraticForm& q1, const QuadraticForm& q2);

// |{v : q(v) = 0}|: enumeration for dim <= 24, closed form beyond
// (2^(2r-1) + sign 2^(r-1) for the regular part, scaled by the radical).
uint64_t zero_count(const QuadraticForm& q);

QuadraticForm orthogonal_sum(const QuadraticForm& q1, const QuadraticForm& q2);

}  // namespace sp2g
