#include "conclab/rat_matrix.hpp"

namespace conclab {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_) throw InvalidInput("ragged matrix initializer");
        for (const auto& v : row) data_.push_back(v);
    }
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), data_(rows_ * cols_) {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) at(r, c) = Rat(m.at(r, c));
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in +");
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
    return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in -");
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw InvalidInput("matrix shape mismatch in *");
    RatMatrix m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& v = at(r, k);
            if (v == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, c) += v * o.at(k, c);
        }
    return m;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
    return m;
}

namespace {

// Row-reduces a copy; returns (echelon form, pivot columns, det scale, sign).
struct Echelon {
    RatMatrix m;
    std::vector<std::size_t> pivot_cols;
    Rat det;  // valid only for square input
};

Echelon echelonize(RatMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Echelon e{m, {}, Rat(1)};
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && e.m.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(e.m.at(p, j), e.m.at(r, j));
            e.det = -e.det;
        }
        const Rat piv = e.m.at(r, c);
        e.det *= piv;
        for (std::size_t j = c; j < cols; ++j) e.m.at(r, j) /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || e.m.at(i, c) == 0) continue;
            const Rat f = e.m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) e.m.at(i, j) -= f * e.m.at(r, j);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

}  // namespace

Rat RatMatrix::det() const {
    if (!is_square()) throw InvalidInput("determinant of non-square matrix");
    if (rows_ == 0) return 1;
    Echelon e = echelonize(*this);
    return e.pivot_cols.size() == rows_ ? e.det : Rat(0);
}

std::size_t RatMatrix::rank() const { return echelonize(*this).pivot_cols.size(); }

bool RatMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
    if (!is_square()) throw InvalidInput("inverse of non-square matrix");
    const std::size_t n = rows_;
    RatMatrix aug(n, 2 * n);
    aug.set_block(0, 0, *this);
    aug.set_block(0, n, identity(n));
    Echelon e = echelonize(aug);
    if (e.pivot_cols.size() < n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (e.pivot_cols[i] != i) return std::nullopt;
    return e.m.block(0, n, n, n);
}

RatMatrix RatMatrix::null_space() const {
    Echelon e = echelonize(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMatrix basis(cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            basis.at(e.pivot_cols[i], k) = -e.m.at(i, fc);
    }
    return basis;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& o) {
    for (std::size_t r = 0; r < o.rows_; ++r)
        for (std::size_t c = 0; c < o.cols_; ++c) at(r0 + r, c0 + c) = o.at(r, c);
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = at(r0 + r, c0 + c);
    return m;
}

RatMatrix RatMatrix::dsum(const RatMatrix& o) const {
    RatMatrix m(rows_ + o.rows_, cols_ + o.cols_);
    m.set_block(0, 0, *this);
    m.set_block(rows_, cols_, o);
    return m;
}

RatMatrix RatMatrix::from_blocks(const std::vector<std::vector<RatMatrix>>& grid) {
    if (grid.empty()) return RatMatrix();
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
    RatMatrix m(total_r, total_c);
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

bool RatMatrix::to_int_matrix(IntMatrix& out) const {
    IntMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rat& v = at(r, c);
            if (boost::multiprecision::denominator(v) != 1) return false;
            m.at(r, c) = boost::multiprecision::numerator(v);
        }
    out = m;
    return true;
}

RatMatrix scalar_mul(const Rat& c, const RatMatrix& a) {
    RatMatrix m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(r, j) = c * a.at(r, j);
    return m;
}

}  // namespace conclab
