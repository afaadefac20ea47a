#include "sp2g/f2.hpp"

#include <bit>
#include <stdexcept>

namespace sp2g {

namespace {

uint64_t mask_for(int dim) {
    return dim >= 64 ? ~uint64_t{0} : (uint64_t{1} << dim) - 1;
}

void check_dim(int dim) {
    if (dim < 0 || dim > 64) {
        throw std::invalid_argument("dimension must be between 0 and 64");
    }
}

}  // namespace

F2Vector::F2Vector(int dim, uint64_t bits) : dim_(dim), bits_(bits) {
    check_dim(dim);
    if (bits & ~mask_for(dim)) {
        throw std::invalid_argument("bits set beyond vector dimension");
    }
}

F2Vector F2Vector::unit(int dim, int i) {
    if (i < 0 || i >= dim) {
        throw std::invalid_argument("unit vector index out of range");
    }
    return F2Vector(dim, uint64_t{1} << i);
}

F2Vector F2Vector::from_string(const std::string& s) {
    check_dim(static_cast<int>(s.size()));
    uint64_t bits = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            bits |= uint64_t{1} << i;
        } else if (s[i] != '0') {
            throw std::invalid_argument("vector string must consist of '0'/'1'");
        }
    }
    return F2Vector(static_cast<int>(s.size()), bits);
}

bool F2Vector::get(int i) const {
    if (i < 0 || i >= dim_) {
        throw std::out_of_range("vector index out of range");
    }
    return (bits_ >> i) & 1;
}

F2Vector F2Vector::with_bit(int i, bool value) const {
    if (i < 0 || i >= dim_) {
        throw std::out_of_range("vector index out of range");
    }
    uint64_t b = value ? (bits_ | (uint64_t{1} << i)) : (bits_ & ~(uint64_t{1} << i));
    return F2Vector(dim_, b);
}

int F2Vector::weight() const {
    return std::popcount(bits_);
}

uint64_t F2Vector::lex_rank() const {
    uint64_t rank = 0;
    for (int i = 0; i < dim_; ++i) {
        rank = (rank << 1) | ((bits_ >> i) & 1);
    }
    return rank;
}

F2Vector F2Vector::from_lex_rank(int dim, uint64_t rank) {
    check_dim(dim);
    uint64_t bits = 0;
    for (int i = dim - 1; i >= 0; --i) {
        bits |= (rank & 1) << i;
        rank >>= 1;
    }
    return F2Vector(dim, bits);
}

F2Vector F2Vector::operator+(const F2Vector& o) const {
    if (dim_ != o.dim_) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    return F2Vector(dim_, bits_ ^ o.bits_);
}

bool F2Vector::dot(const F2Vector& a, const F2Vector& b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    return std::popcount(a.bits_ & b.bits_) & 1;
}

std::string F2Vector::to_string() const {
    std::string s(static_cast<size_t>(dim_), '0');
    for (int i = 0; i < dim_; ++i) {
        if ((bits_ >> i) & 1) s[static_cast<size_t>(i)] = '1';
    }
    return s;
}

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0) throw std::invalid_argument("negative row count");
    check_dim(cols);
    data_.assign(static_cast<size_t>(rows), 0);
}

F2Matrix::F2Matrix(int cols, const std::vector<F2Vector>& rows)
    : rows_(static_cast<int>(rows.size())), cols_(cols) {
    check_dim(cols);
    data_.reserve(rows.size());
    for (const F2Vector& r : rows) {
        if (r.dim() != cols) {
            throw std::invalid_argument("row dimension does not match column count");
        }
        data_.push_back(r.bits());
    }
}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<F2Vector> vs;
    vs.reserve(rows.size());
    for (const std::string& s : rows) vs.push_back(F2Vector::from_string(s));
    int cols = vs.empty() ? 0 : vs.front().dim();
    return F2Matrix(cols, vs);
}

bool F2Matrix::get(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    return (data_[static_cast<size_t>(r)] >> c) & 1;
}

void F2Matrix::set(int r, int c, bool value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    uint64_t bit = uint64_t{1} << c;
    if (value) {
        data_[static_cast<size_t>(r)] |= bit;
    } else {
        data_[static_cast<size_t>(r)] &= ~bit;
    }
}

F2Vector F2Matrix::row(int r) const {
    if (r < 0 || r >= rows_) throw std::out_of_range("row index out of range");
    return F2Vector(cols_, data_[static_cast<size_t>(r)]);
}

F2Vector F2Matrix::mul(const F2Vector& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    uint64_t out = 0;
    for (int r = 0; r < rows_; ++r) {
        out |= static_cast<uint64_t>(std::popcount(data_[static_cast<size_t>(r)] & x.bits()) & 1)
               << r;
    }
    if (rows_ > 64) throw std::invalid_argument("result dimension exceeds 64");
    return F2Vector(rows_, out);
}

F2Matrix F2Matrix::mul(const F2Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix-matrix dimension mismatch");
    F2Matrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        uint64_t left = data_[static_cast<size_t>(r)];
        while (left) {
            int k = std::countr_zero(left);
            left &= left - 1;
            acc ^= o.data_[static_cast<size_t>(k)];
        }
        out.data_[static_cast<size_t>(r)] = acc;
    }
    return out;
}

F2Matrix F2Matrix::transposed() const {
    if (rows_ > 64) throw std::invalid_argument("transpose of matrix with more than 64 rows");
    F2Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        uint64_t bits = data_[static_cast<size_t>(r)];
        while (bits) {
            int c = std::countr_zero(bits);
            bits &= bits - 1;
            out.data_[static_cast<size_t>(c)] |= uint64_t{1} << r;
        }
    }
    return out;
}

bool F2Matrix::is_invertible() const {
    return rows_ == cols_ && mat_rank(*this) == cols_;
}

std::optional<F2Matrix> F2Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    std::vector<uint64_t> work = data_;
    F2Matrix inv = identity(rows_);
    int n = rows_;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if ((work[static_cast<size_t>(r)] >> col) & 1) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        std::swap(work[static_cast<size_t>(col)], work[static_cast<size_t>(pivot)]);
        std::swap(inv.data_[static_cast<size_t>(col)], inv.data_[static_cast<size_t>(pivot)]);
        for (int r = 0; r < n; ++r) {
            if (r != col && ((work[static_cast<size_t>(r)] >> col) & 1)) {
                work[static_cast<size_t>(r)] ^= work[static_cast<size_t>(col)];
                inv.data_[static_cast<size_t>(r)] ^= inv.data_[static_cast<size_t>(col)];
            }
        }
    }
    return inv;
}

std::string F2Matrix::to_string() const {
    std::string s;
    for (int r = 0; r < rows_; ++r) {
        if (r) s += '\n';
        s += row(r).to_string();
    }
    return s;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(std::vector<uint64_t>& rows, int cols) {
    std::vector<int> pivots;
    size_t pivot_row = 0;
    for (int c = 0; c < cols && pivot_row < rows.size(); ++c) {
        size_t r = pivot_row;
        while (r < rows.size() && !((rows[r] >> c) & 1)) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[pivot_row], rows[r]);
        for (size_t k = 0; k < rows.size(); ++k) {
            if (k != pivot_row && ((rows[k] >> c) & 1)) rows[k] ^= rows[pivot_row];
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return pivots;
}

}  // namespace

int mat_rank(const F2Matrix& m) {
    std::vector<uint64_t> rows;
    rows.reserve(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row_bits(r));
    return static_cast<int>(rref(rows, m.cols()).size());
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
    std::vector<uint64_t> rows;
    rows.reserve(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row_bits(r));
    std::vector<int> pivots = rref(rows, m.cols());

    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<F2Vector> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        uint64_t v = uint64_t{1} << f;
        for (size_t pr = 0; pr < pivots.size(); ++pr) {
            if ((rows[pr] >> f) & 1) v |= uint64_t{1} << pivots[pr];
        }
        basis.emplace_back(m.cols(), v);
    }
    return basis;
}

std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
    if (b.dim() != m.rows()) throw std::invalid_argument("rhs dimension mismatch");
    if (m.cols() >= 64) throw std::invalid_argument("augmented solve needs cols < 64");
    // Augment with b in the column past the end.
    std::vector<uint64_t> rows;
    rows.reserve(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        rows.push_back(m.row_bits(r) | (uint64_t{b.get(r)} << m.cols()));
    }
    std::vector<int> pivots = rref(rows, m.cols() + 1);
    uint64_t x = 0;
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
        if (pivots[pr] == m.cols()) return std::nullopt;  // 0 = 1 row
        if ((rows[pr] >> m.cols()) & 1) x |= uint64_t{1} << pivots[pr];
    }
    return F2Vector(m.cols(), x);
}

F2Matrix invertible_completion(const std::vector<F2Vector>& vectors, int dim) {
    std::vector<F2Vector> rows = vectors;
    for (const F2Vector& v : rows) {
        if (v.dim() != dim) throw std::invalid_argument("vector dimension mismatch");
    }
    F2Matrix given(dim, rows);
    if (mat_rank(given) != static_cast<int>(rows.size())) {
        throw std::invalid_argument("input vectors are dependent");
    }
    for (int i = 0; i < dim && static_cast<int>(rows.size()) < dim; ++i) {
        std::vector<F2Vector> trial = rows;
        trial.push_back(F2Vector::unit(dim, i));
        if (mat_rank(F2Matrix(dim, trial)) == static_cast<int>(trial.size())) {
            rows = std::move(trial);
        }
    }
    return F2Matrix(dim, rows);
}

}  // namespace sp2g
