#pragma once

#include "joininv/fgab.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace joininv {

// Dense matrix over Z with arbitrary-precision entries, row-major storage.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix&) const = default;

    // Horizontal / vertical concatenation.
    IntMatrix hstack(const IntMatrix& other) const;
    IntMatrix vstack(const IntMatrix& other) const;
    IntMatrix column(std::size_t j) const;
    IntMatrix top_rows(std::size_t k) const;

    bool is_zero() const;
    std::string to_string() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void negate_row(std::size_t i);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// Smith normal form u * a * v = s with unimodular u, v and a non-negative,
// divisibility-chained diagonal.  u_inv is carried along because lattice
// computations downstream need columns of u^{-1}.
struct SnfResult {
    IntMatrix u, s, v;
    IntMatrix u_inv;
    std::vector<Int> diagonal;  // all min(rows, cols) entries, d1 | d2 | ..., zeros trailing
    std::size_t rank = 0;
};

SnfResult snf(const IntMatrix& a);

// Exact determinant via Bareiss fraction-free elimination (independent of snf).
Int det(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

// Basis for { x : a x = 0 } as matrix columns; each column's first nonzero
// entry is made positive.
IntMatrix kernel_basis(const IntMatrix& a);

// Z^rows(a) / column-span(a) in invariant-factor form.
FgAbGroup cokernel(const IntMatrix& a);

// Solve a * x = b over Z for matrix right-hand sides; nullopt if unsolvable.
std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b);

struct IncompatibleMap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Map between presented groups Z^m/col(src_rel) -> Z^n/col(dst_rel) given by
// an n x m matrix.  Throws IncompatibleMap unless the matrix carries source
// relations into destination relations.  Returns (kernel, cokernel).
std::pair<FgAbGroup, FgAbGroup> presented_hom_kernel_cokernel(
    const IntMatrix& src_rel, const IntMatrix& dst_rel, const IntMatrix& map);

} // namespace joininv
