#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sp2g/qform.hpp"

namespace sp2g {

// Vector-valued quadratic map q : V -> W over F2, stored as one scalar form
// per coordinate of W.
class QuadraticMap {
  public:
    QuadraticMap() = default;
    QuadraticMap(int dim_v, std::vector<QuadraticForm> components);

    int dim_v() const { return dim_v_; }
    int dim_w() const { return static_cast<int>(components_.size()); }
    const QuadraticForm& component(int i) const { return components_[static_cast<size_t>(i)]; }
    const std::vector<QuadraticForm>& components() const { return components_; }

    bool operator==(const QuadraticMap& o) const = default;

  private:
    int dim_v_ = 0;
    std::vector<QuadraticForm> components_;
};

F2Vector evaluate_map(const QuadraticMap& qm, const F2Vector& v);

// b_q(u,v), coordinate i given by the i-th component's polar matrix.
F2Vector polar_map(const QuadraticMap& qm, const F2Vector& u, const F2Vector& v);

// Basis of rad(b_q) = {v : b_q(u,v) = 0 for all u}, the kernel of the
// stacked polar matrices. The map is regular when this is empty.
std::vector<F2Vector> bq_radical(const QuadraticMap& qm);
bool is_regular(const QuadraticMap& qm);

// True iff the values b_q(e_i, e_j), i < j, span W.
bool image_spans_w(const QuadraticMap& qm);

// The paper enumerates nonzero functionals s_1, s_2, ... by the integer
// value of their coordinate string (coordinate 0 carries the highest bit).
F2Vector functional_by_index(int dim_w, uint64_t index);

// s_*(q) = s ∘ q: the sum of the components selected by s.
QuadraticForm transfer(const QuadraticMap& qm, const F2Vector& s);

// The regular form q_s induced by s_*(q) on V / rad(b_{s_*(q)}), together
// with the canonical surjection (projection.rows() = dim of the quotient).
// Absent iff s_*(q) does not vanish on its radical. The quotient basis is
// the lexicographically first complement of the radical, so
// q_s(projection * x) = s_*(q)(x) for all x. Throws on s = 0.
struct InducedForm {
    QuadraticForm form;
    F2Matrix projection;
};
std::optional<InducedForm> induced_form(const QuadraticMap& qm, const F2Vector& s);

// Block sum acting on V1 ⊕ V2 with the shared W.
QuadraticMap map_orthogonal_sum(const QuadraticMap& q1, const QuadraticMap& q2);

// q ∘ T for invertible T on V (componentwise compose).
QuadraticMap compose_map(const QuadraticMap& qm, const F2Matrix& t);

// S ∘ q for S acting on W: component i becomes the sum of the old
// components selected by row i of S.
QuadraticMap postcompose_map(const F2Matrix& s, const QuadraticMap& qm);

// |{v : q(v) = 0}| by enumeration (dim_v <= 24).
uint64_t map_zero_count(const QuadraticMap& qm);

// Self-test of the character-sum identity
//   2^dim_w * |{v : q(v)=0}| =
//   2^dim_v + sum over nonzero s with q_s defined of (-1)^Arf(q_s) * 2^(rad_dim(s) + r(s)),
// where 2 r(s) = dim_v - rad_dim(s). Must hold for every quadratic map.
bool gauss_identity_check(const QuadraticMap& qm);

}  // namespace sp2g
