#include "opspec/matrix.hpp"

#include <sstream>
#include <utility>

#include "opspec/error.hpp"

namespace opspec {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error("shape-mismatch", "ragged initializer");
        for (const auto& v : row) data_.push_back(v);
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<GaussianRational>& d) {
    ExactMatrix m(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
    return m;
}

ExactMatrix ExactMatrix::direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, a.cols_, b);
    return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("shape-mismatch", "matrix addition");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("shape-mismatch", "matrix subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
    for (auto& v : data_) v *= s;
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("shape-mismatch", "matrix product");
    ExactMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j).is_zero()) continue;
                m(i, j) += aik * b(k, j);
            }
        }
    }
    return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix ExactMatrix::pow(std::size_t k) const {
    if (!square()) throw Error("shape-mismatch", "power of non-square matrix");
    ExactMatrix result = identity(rows_);
    ExactMatrix base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

ExactMatrix ExactMatrix::conjugate_transpose() const {
    ExactMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

std::size_t ExactMatrix::nilpotency_degree() const {
    if (!square()) throw Error("shape-mismatch", "nilpotency of non-square matrix");
    if (rows_ == 0) return 0;
    ExactMatrix p = identity(rows_);
    for (std::size_t k = 1; k <= rows_; ++k) {
        p = p * (*this);
        if (p.is_zero()) return k;
    }
    return 0;
}

bool ExactMatrix::is_nilpotent() const { return rows_ == 0 || nilpotency_degree() > 0; }

ExactMatrix ExactMatrix::rref(std::vector<std::size_t>* pivots) const {
    ExactMatrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && m(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(row, j));
        GaussianRational inv = m(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) m(row, j) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            GaussianRational f = m(r, col);
            for (std::size_t j = col; j < cols_; ++j)
                if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

std::size_t ExactMatrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

ExactMatrix ExactMatrix::kernel_basis() const {
    std::vector<std::size_t> piv;
    ExactMatrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : piv) is_pivot[p] = true;
    ExactMatrix basis(cols_, cols_ - piv.size());
    std::size_t out = 0;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        basis(free, out) = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) basis(piv[k], out) = -r(k, free);
        ++out;
    }
    return basis;
}

ExactMatrix ExactMatrix::column_basis() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    ExactMatrix basis(rows_, piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t i = 0; i < rows_; ++i) basis(i, k) = (*this)(i, piv[k]);
    return basis;
}

ExactMatrix ExactMatrix::inverse() const {
    if (!square()) throw Error("shape-mismatch", "inverse of non-square matrix");
    std::vector<std::size_t> piv;
    ExactMatrix r = hcat(*this, identity(rows_)).rref(&piv);
    if (piv.size() < rows_ || (rows_ > 0 && piv.back() >= rows_))
        throw Error("singular-matrix", "matrix is not invertible");
    return r.block(0, rows_, rows_, rows_);
}

GaussianRational ExactMatrix::determinant() const {
    if (!square()) throw Error("shape-mismatch", "determinant of non-square matrix");
    ExactMatrix m = *this;
    GaussianRational det(1);
    for (std::size_t col = 0; col < rows_; ++col) {
        std::size_t sel = col;
        while (sel < rows_ && m(sel, col).is_zero()) ++sel;
        if (sel == rows_) return GaussianRational(0);
        if (sel != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        GaussianRational inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m(r, col).is_zero()) continue;
            GaussianRational f = m(r, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    ExactMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void ExactMatrix::set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

ExactMatrix ExactMatrix::hcat(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_) throw Error("shape-mismatch", "hcat");
    ExactMatrix m(a.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    return m;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace opspec
