#include "sp2g/qmap.hpp"

#include <stdexcept>

namespace sp2g {

QuadraticMap::QuadraticMap(int dim_v, std::vector<QuadraticForm> components)
    : dim_v_(dim_v), components_(std::move(components)) {
    for (const QuadraticForm& c : components_) {
        if (c.dim() != dim_v) {
            throw std::invalid_argument("component dimension does not match dim_v");
        }
    }
}

F2Vector evaluate_map(const QuadraticMap& qm, const F2Vector& v) {
    if (v.dim() != qm.dim_v()) throw std::invalid_argument("map/vector dimension mismatch");
    uint64_t out = 0;
    for (int i = 0; i < qm.dim_w(); ++i) {
        out |= uint64_t{evaluate(qm.component(i), v)} << i;
    }
    return F2Vector(qm.dim_w(), out);
}

F2Vector polar_map(const QuadraticMap& qm, const F2Vector& u, const F2Vector& v) {
    if (u.dim() != qm.dim_v() || v.dim() != qm.dim_v()) {
        throw std::invalid_argument("map/vector dimension mismatch");
    }
    uint64_t out = 0;
    for (int i = 0; i < qm.dim_w(); ++i) {
        bool bit = F2Vector::dot(u, polar_matrix(qm.component(i)).mul(v));
        out |= uint64_t{bit} << i;
    }
    return F2Vector(qm.dim_w(), out);
}

namespace {

// All components' polar matrices stacked into one (m * n) x n matrix.
F2Matrix stacked_polars(const QuadraticMap& qm) {
    std::vector<F2Vector> rows;
    rows.reserve(static_cast<size_t>(qm.dim_w() * qm.dim_v()));
    for (int i = 0; i < qm.dim_w(); ++i) {
        F2Matrix b = polar_matrix(qm.component(i));
        for (int r = 0; r < b.rows(); ++r) rows.push_back(b.row(r));
    }
    return F2Matrix(qm.dim_v(), rows);
}

}  // namespace

std::vector<F2Vector> bq_radical(const QuadraticMap& qm) {
    return kernel_basis(stacked_polars(qm));
}

bool is_regular(const QuadraticMap& qm) {
    return mat_rank(stacked_polars(qm)) == qm.dim_v();
}

bool image_spans_w(const QuadraticMap& qm) {
    int n = qm.dim_v(), m = qm.dim_w();
    std::vector<F2Vector> values;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            values.push_back(polar_map(qm, F2Vector::unit(n, i), F2Vector::unit(n, j)));
        }
    }
    return mat_rank(F2Matrix(m, values)) == m;
}

F2Vector functional_by_index(int dim_w, uint64_t index) {
    return F2Vector::from_lex_rank(dim_w, index);
}

QuadraticForm transfer(const QuadraticMap& qm, const F2Vector& s) {
    if (s.dim() != qm.dim_w()) throw std::invalid_argument("functional dimension mismatch");
    int n = qm.dim_v();
    F2Matrix acc(n, n);
    for (int i = 0; i < qm.dim_w(); ++i) {
        if (!s.get(i)) continue;
        for (int r = 0; r < n; ++r) {
            acc.xor_row(r, qm.component(i).row_bits(r));
        }
    }
    return QuadraticForm(acc);
}

std::optional<InducedForm> induced_form(const QuadraticMap& qm, const F2Vector& s) {
    if (s.is_zero()) throw std::invalid_argument("functional must be nonzero");
    QuadraticForm t = transfer(qm, s);
    std::vector<F2Vector> rad = radical(t);
    for (const F2Vector& g : rad) {
        if (evaluate(t, g)) return std::nullopt;
    }

    int n = qm.dim_v();
    int k = n - static_cast<int>(rad.size());
    // Lexicographically first complement: greedy unit vectors independent of
    // the radical and of the ones already chosen.
    std::vector<F2Vector> span = rad;
    std::vector<F2Vector> complement;
    for (int i = 0; i < n && static_cast<int>(complement.size()) < k; ++i) {
        std::vector<F2Vector> trial = span;
        trial.push_back(F2Vector::unit(n, i));
        if (mat_rank(F2Matrix(n, trial)) == static_cast<int>(trial.size())) {
            span = std::move(trial);
            complement.push_back(F2Vector::unit(n, i));
        }
    }

    // Full basis (complement then radical), columns of M; the projection is
    // the first k rows of M^{-1}.
    std::vector<F2Vector> basis = complement;
    basis.insert(basis.end(), rad.begin(), rad.end());
    F2Matrix m_cols(n, n);
    for (int col = 0; col < n; ++col) {
        for (int r = 0; r < n; ++r) {
            m_cols.set(r, col, basis[static_cast<size_t>(col)].get(r));
        }
    }
    F2Matrix inv = *m_cols.inverse();
    std::vector<F2Vector> proj_rows;
    for (int r = 0; r < k; ++r) proj_rows.push_back(inv.row(r));

    F2Matrix qs(k, k);
    F2Matrix bt = polar_matrix(t);
    for (int i = 0; i < k; ++i) {
        qs.set(i, i, evaluate(t, complement[static_cast<size_t>(i)]));
        for (int j = i + 1; j < k; ++j) {
            qs.set(i, j, F2Vector::dot(complement[static_cast<size_t>(i)],
                                       bt.mul(complement[static_cast<size_t>(j)])));
        }
    }
    return InducedForm{QuadraticForm(qs), F2Matrix(n, proj_rows)};
}

QuadraticMap map_orthogonal_sum(const QuadraticMap& q1, const QuadraticMap& q2) {
    if (q1.dim_w() != q2.dim_w()) {
        throw std::invalid_argument("orthogonal sum needs equal dim_w");
    }
    std::vector<QuadraticForm> comps;
    comps.reserve(static_cast<size_t>(q1.dim_w()));
    for (int i = 0; i < q1.dim_w(); ++i) {
        comps.push_back(orthogonal_sum(q1.component(i), q2.component(i)));
    }
    return QuadraticMap(q1.dim_v() + q2.dim_v(), std::move(comps));
}

QuadraticMap compose_map(const QuadraticMap& qm, const F2Matrix& t) {
    std::vector<QuadraticForm> comps;
    comps.reserve(static_cast<size_t>(qm.dim_w()));
    for (int i = 0; i < qm.dim_w(); ++i) comps.push_back(compose(qm.component(i), t));
    return QuadraticMap(qm.dim_v(), std::move(comps));
}

QuadraticMap postcompose_map(const F2Matrix& s, const QuadraticMap& qm) {
    if (s.cols() != qm.dim_w()) throw std::invalid_argument("postcompose dimension mismatch");
    std::vector<QuadraticForm> comps;
    comps.reserve(static_cast<size_t>(s.rows()));
    for (int r = 0; r < s.rows(); ++r) {
        comps.push_back(transfer(qm, s.row(r)));
    }
    return QuadraticMap(qm.dim_v(), std::move(comps));
}

uint64_t map_zero_count(const QuadraticMap& qm) {
    int n = qm.dim_v();
    if (n > 24) throw std::invalid_argument("map zero count capped at dim_v = 24");
    uint64_t count = 0;
    for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
        count += evaluate_map(qm, F2Vector(n, v)).is_zero();
    }
    return count;
}

bool gauss_identity_check(const QuadraticMap& qm) {
    int n = qm.dim_v(), m = qm.dim_w();
    // Both sides fit comfortably in signed 64-bit for n + m <= 40.
    long long lhs = static_cast<long long>(map_zero_count(qm)) << m;
    long long rhs = 1LL << n;
    for (uint64_t idx = 1; idx < (uint64_t{1} << m); ++idx) {
        std::optional<InducedForm> ind = induced_form(qm, functional_by_index(m, idx));
        if (!ind) continue;
        int qs_dim = ind->form.dim();
        int rad_dim = n - qs_dim;
        int r = qs_dim / 2;
        long long term = 1LL << (rad_dim + r);
        rhs += arf(ind->form) ? -term : term;
    }
    return lhs == rhs;
}

}  // namespace sp2g
