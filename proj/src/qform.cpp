#include "sp2g/qform.hpp"

#include <bit>
#include <stdexcept>

namespace sp2g {

QuadraticForm::QuadraticForm(int dim) : coeffs_(dim, dim) {}

QuadraticForm::QuadraticForm(const F2Matrix& any_matrix_of_q) {
    if (any_matrix_of_q.rows() != any_matrix_of_q.cols()) {
        throw std::invalid_argument("form matrix must be square");
    }
    int n = any_matrix_of_q.rows();
    F2Matrix q(n, n);
    for (int i = 0; i < n; ++i) {
        q.set(i, i, any_matrix_of_q.get(i, i));
        for (int j = i + 1; j < n; ++j) {
            q.set(i, j, any_matrix_of_q.get(i, j) ^ any_matrix_of_q.get(j, i));
        }
    }
    coeffs_ = std::move(q);
}

bool evaluate(const QuadraticForm& q, const F2Vector& v) {
    if (v.dim() != q.dim()) throw std::invalid_argument("form/vector dimension mismatch");
    uint64_t bits = v.bits();
    uint64_t rest = bits;
    int acc = 0;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        acc ^= std::popcount(q.row_bits(i) & bits);
    }
    return acc & 1;
}

F2Matrix polar_matrix(const QuadraticForm& q) {
    int n = q.dim();
    F2Matrix b(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool v = q.coeff(i, j);
            b.set(i, j, v);
            b.set(j, i, v);
        }
    }
    return b;
}

std::vector<F2Vector> radical(const QuadraticForm& q) {
    return kernel_basis(polar_matrix(q));
}

QuadraticForm compose(const QuadraticForm& q, const F2Matrix& t) {
    if (t.rows() != q.dim() || t.cols() != q.dim()) {
        throw std::invalid_argument("transition matrix dimension mismatch");
    }
    return QuadraticForm(t.transposed().mul(q.coeffs()).mul(t));
}

bool NormalForm::evaluate(const F2Vector& y) const {
    if (y.dim() != dim()) throw std::invalid_argument("normal form dimension mismatch");
    bool acc = false;
    int k = 0;
    for (const Pair& p : pairs) {
        bool x = y.get(k), yy = y.get(k + 1);
        acc ^= (p.a & x) ^ (x & yy) ^ (p.b & yy);
        k += 2;
    }
    for (bool c : singular_diag) {
        acc ^= c & y.get(k);
        ++k;
    }
    return acc;
}

QuadraticForm NormalForm::to_form() const {
    F2Matrix m(dim(), dim());
    int k = 0;
    for (const Pair& p : pairs) {
        m.set(k, k, p.a);
        m.set(k, k + 1, true);
        m.set(k + 1, k + 1, p.b);
        k += 2;
    }
    for (bool c : singular_diag) {
        m.set(k, k, c);
        ++k;
    }
    return QuadraticForm(m);
}

Normalization normalize(const QuadraticForm& q) {
    int n = q.dim();
    F2Matrix b = polar_matrix(q);
    auto pairing = [&](const F2Vector& u, const F2Vector& v) {
        return F2Vector::dot(u, b.mul(v));
    };

    std::vector<F2Vector> working;
    working.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) working.push_back(F2Vector::unit(n, i));

    NormalForm nf;
    std::vector<F2Vector> new_basis;
    for (;;) {
        int pi = -1, pj = -1;
        for (size_t i = 0; i < working.size() && pi < 0; ++i) {
            for (size_t j = i + 1; j < working.size(); ++j) {
                if (pairing(working[i], working[j])) {
                    pi = static_cast<int>(i);
                    pj = static_cast<int>(j);
                    break;
                }
            }
        }
        if (pi < 0) break;
        F2Vector v = working[static_cast<size_t>(pi)];
        F2Vector w = working[static_cast<size_t>(pj)];
        nf.pairs.push_back({evaluate(q, v), evaluate(q, w)});
        new_basis.push_back(v);
        new_basis.push_back(w);
        working.erase(working.begin() + pj);
        working.erase(working.begin() + pi);
        for (F2Vector& u : working) {
            if (pairing(u, w)) u = u + v;
            if (pairing(u, v)) u = u + w;
        }
    }

    // What is left spans the radical. Normalize its values to <1,0,...,0>
    // or all zeros: q is additive on the radical.
    std::vector<F2Vector> rad = working;
    int lead = -1;
    for (size_t i = 0; i < rad.size(); ++i) {
        if (evaluate(q, rad[i])) {
            lead = static_cast<int>(i);
            break;
        }
    }
    if (lead >= 0) {
        F2Vector g = rad[static_cast<size_t>(lead)];
        std::vector<F2Vector> fixed;
        fixed.push_back(g);
        for (size_t i = 0; i < rad.size(); ++i) {
            if (static_cast<int>(i) == lead) continue;
            fixed.push_back(evaluate(q, rad[i]) ? rad[i] + g : rad[i]);
        }
        rad = std::move(fixed);
    }
    for (const F2Vector& g : rad) {
        nf.singular_diag.push_back(evaluate(q, g));
        new_basis.push_back(g);
    }

    // Columns of the transition matrix are the new basis vectors.
    F2Matrix t(n, n);
    for (int col = 0; col < n; ++col) {
        for (int r = 0; r < n; ++r) {
            t.set(r, col, new_basis[static_cast<size_t>(col)].get(r));
        }
    }
    return Normalization{std::move(nf), std::move(t)};
}

namespace {

bool arf_of(const NormalForm& nf) {
    bool acc = false;
    for (const NormalForm::Pair& p : nf.pairs) acc ^= p.a & p.b;
    return acc;
}

}  // namespace

WittDecomposition witt_decompose(const QuadraticForm& q) {
    NormalForm nf = normalize(q).form;
    int r = static_cast<int>(nf.pairs.size());
    int s = static_cast<int>(nf.singular_diag.size());
    bool one = !nf.singular_diag.empty() && nf.singular_diag.front();
    bool a = arf_of(nf);
    if (one) {
        // [1,1] ⊥ <1> ≅ [0,0] ⊥ <1>, so the regular part splits fully.
        return {r, AnisotropicKind::single_one, s - 1};
    }
    if (a) {
        return {r - 1, AnisotropicKind::form_11, s};
    }
    return {r, AnisotropicKind::zero, s};
}

QuadraticForm reassemble(const WittDecomposition& w) {
    QuadraticForm acc(0);
    QuadraticForm h = NormalForm{{{false, false}}, {}}.to_form();
    for (int i = 0; i < w.hyperbolic_count; ++i) acc = orthogonal_sum(acc, h);
    switch (w.anisotropic_kind) {
        case AnisotropicKind::zero:
            break;
        case AnisotropicKind::single_one:
            acc = orthogonal_sum(acc, NormalForm{{}, {true}}.to_form());
            break;
        case AnisotropicKind::form_11:
            acc = orthogonal_sum(acc, NormalForm{{{true, true}}, {}}.to_form());
            break;
    }
    for (int j = 0; j < w.zero_diag_count; ++j) {
        acc = orthogonal_sum(acc, QuadraticForm(1));
    }
    return acc;
}

IsometryInvariant isometry_invariant(const QuadraticForm& q) {
    NormalForm nf = normalize(q).form;
    int s = static_cast<int>(nf.singular_diag.size());
    bool vanishes = true;
    for (bool c : nf.singular_diag) vanishes &= !c;
    IsometryInvariant inv;
    inv.dim = q.dim();
    inv.rad_dim = s;
    inv.rad_zero_dim = vanishes ? s : s - 1;
    if (vanishes) inv.arf = arf_of(nf);
    return inv;
}

bool arf(const QuadraticForm& q) {
    NormalForm nf = normalize(q).form;
    if (!nf.singular_diag.empty()) {
        throw std::invalid_argument("form not regular");
    }
    return arf_of(nf);
}

bool is_isometric(const QuadraticForm& q1, const QuadraticForm& q2) {
    return isometry_invariant(q1) == isometry_invariant(q2);
}

uint64_t zero_count(const QuadraticForm& q) {
    int n = q.dim();
    if (n <= 24) {
        uint64_t count = 0;
        for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
            count += !evaluate(q, F2Vector(n, v));
        }
        return count;
    }
    NormalForm nf = normalize(q).form;
    int r = static_cast<int>(nf.pairs.size());
    int s = static_cast<int>(nf.singular_diag.size());
    bool one = !nf.singular_diag.empty() && nf.singular_diag.front();
    if (one) {
        // q restricted to the radical is a nonzero linear functional, so the
        // zeros split the space exactly in half.
        return uint64_t{1} << (n - 1);
    }
    uint64_t regular = r == 0 ? 1
                              : (uint64_t{1} << (2 * r - 1)) +
                                    (arf_of(nf) ? -(uint64_t{1} << (r - 1))
                                                : (uint64_t{1} << (r - 1)));
    return regular << s;
}

QuadraticForm orthogonal_sum(const QuadraticForm& q1, const QuadraticForm& q2) {
    int n1 = q1.dim(), n2 = q2.dim();
    if (n1 + n2 > 64) throw std::invalid_argument("orthogonal sum exceeds 64 dimensions");
    F2Matrix m(n1 + n2, n1 + n2);
    for (int i = 0; i < n1; ++i) {
        for (int j = i; j < n1; ++j) m.set(i, j, q1.coeff(i, j));
    }
    for (int i = 0; i < n2; ++i) {
        for (int j = i; j < n2; ++j) m.set(n1 + i, n1 + j, q2.coeff(i, j));
    }
    return QuadraticForm(m);
}

}  // namespace sp2g
