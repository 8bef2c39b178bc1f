#include "conclab/int_matrix.hpp"

namespace conclab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_) throw InvalidInput("ragged matrix initializer");
        for (const auto& v : row) data_.push_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in +");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
    return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in -");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw InvalidInput("matrix shape mismatch in *");
    IntMatrix m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& v = at(r, k);
            if (v == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, c) += v * o.at(k, c);
        }
    return m;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
    return m;
}

Int IntMatrix::det() const {
    if (!is_square()) throw InvalidInput("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    std::vector<Int> a = data_;
    auto e = [&](std::size_t r, std::size_t c) -> Int& { return a[r * n + c]; };
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (e(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && e(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = k; c < n; ++c) std::swap(e(k, c), e(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
        prev = e(k, k);
    }
    return sign > 0 ? e(n - 1, n - 1) : Int(-e(n - 1, n - 1));
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& o) {
    for (std::size_t r = 0; r < o.rows_; ++r)
        for (std::size_t c = 0; c < o.cols_; ++c) at(r0 + r, c0 + c) = o.at(r, c);
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = at(r0 + r, c0 + c);
    return m;
}

IntMatrix IntMatrix::dsum(const IntMatrix& o) const {
    IntMatrix m(rows_ + o.rows_, cols_ + o.cols_);
    m.set_block(0, 0, *this);
    m.set_block(rows_, cols_, o);
    return m;
}

IntMatrix IntMatrix::from_blocks(const std::vector<std::vector<IntMatrix>>& grid) {
    if (grid.empty()) return IntMatrix();
    std::vector<std::size_t> heights(grid.size()), widths(grid[0].size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].size() != widths.size()) throw InvalidInput("ragged block grid");
        heights[i] = grid[i][0].rows();
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            if (grid[i][j].rows() != heights[i]) throw InvalidInput("block row height mismatch");
            if (i == 0) widths[j] = grid[0][j].cols();
            if (grid[i][j].cols() != widths[j]) throw InvalidInput("block column width mismatch");
        }
    }
    std::size_t total_r = 0, total_c = 0;
    for (auto h : heights) total_r += h;
    for (auto w : widths) total_c += w;
    IntMatrix m(total_r, total_c);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            m.set_block(r0, c0, grid[i][j]);
            c0 += widths[j];
        }
        r0 += heights[i];
    }
    return m;
}

bool is_unimodular(const IntMatrix& a) {
    if (!a.is_square()) return false;
    Int d = a.det();
    return d == 1 || d == -1;
}

IntMatrix congruence(const IntMatrix& q, const IntMatrix& a) {
    if (!is_unimodular(q)) throw InvalidInput("congruence requires a unimodular Q");
    if (!a.is_square() || q.cols() != a.rows()) throw InvalidInput("congruence shape mismatch");
    return q * a * q.transpose();
}

IntMatrix scalar_mul(const Int& c, const IntMatrix& a) {
    IntMatrix m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(r, j) = c * a.at(r, j);
    return m;
}

}  // namespace conclab
