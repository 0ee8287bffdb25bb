#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "opspec/scalar.hpp"

namespace opspec {

/// Dense matrix over the Gaussian rationals. All operations are exact.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t n) { return ExactMatrix(n, n); }
    static ExactMatrix diagonal(const std::vector<GaussianRational>& d);
    /// Block-diagonal direct sum.
    static ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const GaussianRational& s);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

    ExactMatrix pow(std::size_t k) const;
    ExactMatrix conjugate_transpose() const;
    ExactMatrix transpose() const;
    bool is_zero() const;
    /// A^k = 0 for some k <= rows.
    bool is_nilpotent() const;
    /// Smallest k with A^k = 0, or 0 if A is not nilpotent.
    std::size_t nilpotency_degree() const;

    std::size_t rank() const;
    /// Reduced row echelon form and the pivot columns.
    ExactMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    /// Columns form a basis of the null space.
    ExactMatrix kernel_basis() const;
    /// Columns form a basis of the column space (pivot columns of this matrix).
    ExactMatrix column_basis() const;
    /// Throws Error("singular-matrix") if not invertible.
    ExactMatrix inverse() const;
    GaussianRational determinant() const;

    ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b);
    /// Horizontal concatenation [a | b].
    static ExactMatrix hcat(const ExactMatrix& a, const ExactMatrix& b);

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

}  // namespace opspec
