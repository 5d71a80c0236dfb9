#pragma once

#include <vector>

#include "zscheme/error.hpp"

namespace zscheme {

/// Small dense matrix over an exact field (Rational or RatFunc).
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : r_(rows), c_(cols), a_(rows * cols, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    K& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw Error(Errc::DimensionMismatch, "matrix product shapes");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const K& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.c_; ++j) {
                    const K& bkj = b(k, j);
                    if (!bkj.is_zero()) m(i, j) += aik * bkj;
                }
            }
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw Error(Errc::DimensionMismatch, "matrix sum shapes");
        Matrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
        return m;
    }

    Matrix scaled(const K& c) const {
        Matrix m = *this;
        for (auto& x : m.a_) x *= c;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    K trace() const {
        K t(0);
        for (std::size_t i = 0; i < r_ && i < c_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Gaussian elimination determinant; square matrices only.
    K determinant() const {
        if (r_ != c_) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
        Matrix m = *this;
        K det(1);
        for (std::size_t k = 0; k < r_; ++k) {
            std::size_t piv = k;
            while (piv < r_ && m(piv, k).is_zero()) ++piv;
            if (piv == r_) return K(0);
            if (piv != k) {
                m.swap_rows(piv, k);
                det = -det;
            }
            det *= m(k, k);
            const K inv = K(1) / m(k, k);
            for (std::size_t i = k + 1; i < r_; ++i) {
                if (m(i, k).is_zero()) continue;
                const K f = m(i, k) * inv;
                for (std::size_t j = k; j < c_; ++j) m(i, j) -= f * m(k, j);
            }
        }
        return det;
    }

    std::size_t rank() const {
        Matrix m = *this;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < c_ && rank < r_; ++col) {
            std::size_t piv = rank;
            while (piv < r_ && m(piv, col).is_zero()) ++piv;
            if (piv == r_) continue;
            m.swap_rows(piv, rank);
            const K inv = K(1) / m(rank, col);
            for (std::size_t i = rank + 1; i < r_; ++i) {
                if (m(i, col).is_zero()) continue;
                const K f = m(i, col) * inv;
                for (std::size_t j = col; j < c_; ++j) m(i, j) -= f * m(rank, j);
            }
            ++rank;
        }
        return rank;
    }

    /// Gauss-Jordan inverse; throws J_NOT_INVERTIBLE on singular input.
    Matrix inverse() const {
        if (r_ != c_) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
        Matrix m = *this;
        Matrix inv = identity(r_);
        for (std::size_t k = 0; k < r_; ++k) {
            std::size_t piv = k;
            while (piv < r_ && m(piv, k).is_zero()) ++piv;
            if (piv == r_) throw Error(Errc::JNotInvertible, "singular matrix");
            m.swap_rows(piv, k);
            inv.swap_rows(piv, k);
            const K d = K(1) / m(k, k);
            for (std::size_t j = 0; j < c_; ++j) {
                m(k, j) *= d;
                inv(k, j) *= d;
            }
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == k || m(i, k).is_zero()) continue;
                const K f = m(i, k);
                for (std::size_t j = 0; j < c_; ++j) {
                    m(i, j) -= f * m(k, j);
                    inv(i, j) -= f * inv(k, j);
                }
            }
        }
        return inv;
    }

    /// Monic characteristic polynomial by Faddeev-LeVerrier; coefficient i
    /// belongs to x^i.
    std::vector<K> characteristic_polynomial() const {
        if (r_ != c_) throw Error(Errc::DimensionMismatch, "charpoly of non-square matrix");
        const std::size_t n = r_;
        std::vector<K> c(n + 1, K(0));
        c[n] = K(1);
        Matrix mk = *this;
        for (std::size_t k = 1; k <= n; ++k) {
            K ck = mk.trace();
            ck = K(0) - ck / K(static_cast<long>(k));
            c[n - k] = ck;
            if (k < n) {
                Matrix shifted = mk;
                for (std::size_t i = 0; i < n; ++i) shifted(i, i) += ck;
                mk = (*this) * shifted;
            }
        }
        return c;
    }

private:
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<K> a_;
};

} // namespace zscheme
