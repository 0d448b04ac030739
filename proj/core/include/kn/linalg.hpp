#pragma once

// Dense matrices over an exact field plus Gaussian elimination.  Used for
// expanding commutators in a Lie-algebra basis, solving the linear systems
// behind make_lax_element, and as the entry grid of Lax operators.

#include <cstddef>
#include <optional>
#include <vector>

#include "kn/errors.hpp"
#include "kn/rational.hpp"

namespace kn {

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw domain_error("matrix shape mismatch");
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw domain_error("matrix shape mismatch");
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw domain_error("matrix shape mismatch in product");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(r, k);
                if (x == T()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
            }
        return out;
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix out = m;
        for (auto& x : out.data_) x = s * x;
        return out;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix operator-() const {
        Matrix out = *this;
        for (auto& x : out.data_) x = -x;
        return out;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!(x == T())) return false;
        return true;
    }

    T trace() const {
        if (rows_ != cols_) throw domain_error("trace of a non-square matrix");
        T acc = T();
        for (std::size_t k = 0; k < rows_; ++k) acc += (*this)(k, k);
        return acc;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using QiMatrix = Matrix<GaussianRational>;

// One solution of A x = b if the system is consistent (free variables are
// set to zero), std::nullopt otherwise.
std::optional<std::vector<GaussianRational>> solve_linear(QiMatrix A,
                                                          std::vector<GaussianRational> b);

// Exact determinant by fraction-free-ish elimination (field version).
GaussianRational determinant(QiMatrix A);

std::size_t rank(QiMatrix A);

// Basis of the kernel of A (one vector per free column after elimination).
std::vector<std::vector<GaussianRational>> nullspace(QiMatrix A);

}  // namespace kn
