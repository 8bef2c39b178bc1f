#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "conclab/exact.hpp"
#include "conclab/int_matrix.hpp"

namespace conclab {

// Dense rational matrix with exact arithmetic.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> init);
    explicit RatMatrix(const IntMatrix& m);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatMatrix transpose() const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator-() const;
    bool operator==(const RatMatrix& o) const = default;

    Rat det() const;
    std::size_t rank() const;
    bool is_zero() const;

    // Exact inverse; nullopt when singular.
    std::optional<RatMatrix> inverse() const;

    // Basis of the right null space {x : Ax = 0}, one column per basis vector.
    RatMatrix null_space() const;

    void set_block(std::size_t r0, std::size_t c0, const RatMatrix& o);
    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
    RatMatrix dsum(const RatMatrix& o) const;
    static RatMatrix from_blocks(const std::vector<std::vector<RatMatrix>>& grid);

    // True when every entry is an integer; fills the integer image.
    bool to_int_matrix(IntMatrix& out) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

RatMatrix scalar_mul(const Rat& c, const RatMatrix& a);

}  // namespace conclab
