#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sp2g {

// Vector over the two-element field, packed into one machine word.
// Coordinate 0 lives in the least significant bit; bits at positions >= dim
// are always zero. Addition is xor, so v + v = 0.
class F2Vector {
  public:
    F2Vector() = default;
    F2Vector(int dim, uint64_t bits);

    static F2Vector zero(int dim) { return F2Vector(dim, 0); }
    static F2Vector unit(int dim, int i);
    // "1101" means coordinate 0 first, i.e. (1,1,0,1).
    static F2Vector from_string(const std::string& s);

    int dim() const { return dim_; }
    uint64_t bits() const { return bits_; }
    bool get(int i) const;
    F2Vector with_bit(int i, bool value) const;

    bool is_zero() const { return bits_ == 0; }
    int weight() const;

    // Rank of the vector in the lexicographic order of its textual form:
    // coordinate 0 carries the highest weight, so ranks compare exactly like
    // the printed strings. Used wherever a scan order is user-visible
    // (witness search, functional enumeration).
    uint64_t lex_rank() const;
    static F2Vector from_lex_rank(int dim, uint64_t rank);

    F2Vector operator+(const F2Vector& o) const;
    bool operator==(const F2Vector& o) const = default;

    // Parity of the coordinatewise product.
    static bool dot(const F2Vector& a, const F2Vector& b);

    std::string to_string() const;

  private:
    int dim_ = 0;
    uint64_t bits_ = 0;
};

// Dense bit matrix over the two-element field. Each row packs into a word;
// at most 64 columns. Values are immutable in spirit: all operations below
// return fresh matrices.
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols);
    // All rows must have dim == cols.
    explicit F2Matrix(int cols, const std::vector<F2Vector>& rows);

    static F2Matrix identity(int n);
    static F2Matrix from_strings(const std::vector<std::string>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const;
    void set(int r, int c, bool value);
    F2Vector row(int r) const;
    uint64_t row_bits(int r) const { return data_[static_cast<size_t>(r)]; }
    void xor_row(int r, uint64_t bits) { data_[static_cast<size_t>(r)] ^= bits; }

    F2Vector mul(const F2Vector& x) const;
    F2Matrix mul(const F2Matrix& o) const;
    F2Matrix transposed() const;
    bool is_invertible() const;
    std::optional<F2Matrix> inverse() const;

    bool operator==(const F2Matrix& o) const = default;

    // One row per line, coordinate 0 first within each row.
    std::string to_string() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<uint64_t> data_;
};

// Rank over the two-element field.
int mat_rank(const F2Matrix& m);

// Basis of the right kernel {x : m*x = 0}, derived from the reduced row
// echelon form with lowest-index pivots; one basis vector per free column,
// in ascending column order. Deterministic.
std::vector<F2Vector> kernel_basis(const F2Matrix& m);

// Some x with m*x = b, or nullopt when the system is inconsistent. Pivots
// are chosen lowest index first and free variables are set to zero, so the
// result is the solution with the smallest packed value.
std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b);

// Invertible dim x dim matrix whose first rows are the given vectors,
// completed greedily with unit vectors. Throws std::invalid_argument if the
// inputs are dependent.
F2Matrix invertible_completion(const std::vector<F2Vector>& vectors, int dim);

}  // namespace sp2g
