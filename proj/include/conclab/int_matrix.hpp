#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "conclab/exact.hpp"

namespace conclab {

// Dense integer matrix with exact arithmetic. 0x0 matrices are legal and act
// as the empty block in direct sums.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> init);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const = default;

    // Fraction-free Bareiss determinant; exact for any size.
    Int det() const;

    bool is_zero() const;
    bool is_symmetric() const { return *this == transpose(); }

    // Writes o into this at offset (r0, c0); bounds are the caller's problem.
    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& o);
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

    // diag(this, o).
    IntMatrix dsum(const IntMatrix& o) const;

    // Assembles a grid of blocks; row heights and column widths must agree.
    static IntMatrix from_blocks(const std::vector<std::vector<IntMatrix>>& grid);

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// det(A) = +-1. The 0x0 matrix is unimodular (det 1).
bool is_unimodular(const IntMatrix& a);

// Q A Q^T. Requires Q unimodular and shapes compatible.
IntMatrix congruence(const IntMatrix& q, const IntMatrix& a);

IntMatrix scalar_mul(const Int& c, const IntMatrix& a);

}  // namespace conclab
