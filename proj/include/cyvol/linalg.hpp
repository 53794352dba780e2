#pragma once

#include <utility>
#include <vector>

#include "cyvol/error.hpp"
#include "cyvol/rational.hpp"

namespace cyvol {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const T& init = T(0))
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, init) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, "ShapeMismatch", "matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        require(a.cols_ == static_cast<int>(v.size()), "ShapeMismatch",
                "matrix-vector shape mismatch");
        std::vector<T> out(a.rows_, T(0));
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

template <class T>
T determinant(Matrix<T> m) {
    require(m.rows() == m.cols(), "ShapeMismatch", "determinant of non-square matrix");
    const int n = m.rows();
    T det(1);
    for (int p = 0; p < n; ++p) {
        int pivot = -1;
        for (int r = p; r < n; ++r)
            if (m(r, p) != T(0)) { pivot = r; break; }
        if (pivot < 0) return T(0);
        if (pivot != p) {
            for (int c = 0; c < n; ++c) std::swap(m(p, c), m(pivot, c));
            det = -det;
        }
        det *= m(p, p);
        for (int r = p + 1; r < n; ++r) {
            if (m(r, p) == T(0)) continue;
            const T f = m(r, p) / m(p, p);
            for (int c = p; c < n; ++c) m(r, c) -= f * m(p, c);
        }
    }
    return det;
}

template <class T>
Matrix<T> inverse(Matrix<T> m) {
    require(m.rows() == m.cols(), "ShapeMismatch", "inverse of non-square matrix");
    const int n = m.rows();
    Matrix<T> inv = Matrix<T>::identity(n);
    for (int p = 0; p < n; ++p) {
        int pivot = -1;
        for (int r = p; r < n; ++r)
            if (m(r, p) != T(0)) { pivot = r; break; }
        require(pivot >= 0, "SingularGram", "matrix is singular");
        if (pivot != p)
            for (int c = 0; c < n; ++c) {
                std::swap(m(p, c), m(pivot, c));
                std::swap(inv(p, c), inv(pivot, c));
            }
        const T d = m(p, p);
        for (int c = 0; c < n; ++c) { m(p, c) /= d; inv(p, c) /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == p || m(r, p) == T(0)) continue;
            const T f = m(r, p);
            for (int c = 0; c < n; ++c) {
                m(r, c) -= f * m(p, c);
                inv(r, c) -= f * inv(p, c);
            }
        }
    }
    return inv;
}

// Coefficients of the characteristic polynomial det(tI - A), index = power of t.
// Faddeev-LeVerrier keeps everything in exact arithmetic.
inline std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& a) {
    require(a.rows() == a.cols(), "ShapeMismatch", "characteristic polynomial of non-square matrix");
    const int n = a.rows();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    Matrix<Rational> m = Matrix<Rational>::identity(n);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += m(i, i);
        const Rational c = -tr / k;
        coeffs[n - k] = c;
        for (int i = 0; i < n; ++i) m(i, i) += c;
    }
    return coeffs;
}

// Synthetic division of p by (t - root); returns {quotient, remainder}.
inline std::pair<std::vector<Rational>, Rational> divide_by_linear(
    const std::vector<Rational>& p, const Rational& root) {
    require(p.size() >= 2, "ShapeMismatch", "polynomial degree too small for linear division");
    std::vector<Rational> q(p.size() - 1);
    Rational carry = p.back();
    for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
        q[i] = carry;
        carry = p[i] + root * carry;
    }
    return {std::move(q), std::move(carry)};
}

// True when (t - root)^power divides p exactly.
inline bool divisible_by_linear_power(std::vector<Rational> p, const Rational& root, int power) {
    for (int i = 0; i < power; ++i) {
        if (static_cast<int>(p.size()) < 2) return false;
        auto [q, rem] = divide_by_linear(p, root);
        if (rem != 0) return false;
        p = std::move(q);
    }
    return true;
}

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// Inertia of a symmetric rational matrix by congruence diagonalization.
// A fully zero diagonal with a nonzero off-diagonal entry a is split by the
// basis change (e_p + e_q, e_p - e_q), which produces diagonal entries 2a, -2a.
inline Signature signature(Matrix<Rational> m) {
    require(m.rows() == m.cols(), "ShapeMismatch", "signature of non-square matrix");
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            require(m(i, j) == m(j, i), "ShapeMismatch", "signature of non-symmetric matrix");

    auto swap_rows_cols = [&](int i, int j) {
        for (int c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
        for (int r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
    };

    for (int p = 0; p < n; ++p) {
        if (m(p, p) == 0) {
            int diag = -1;
            for (int q = p + 1; q < n; ++q)
                if (m(q, q) != 0) { diag = q; break; }
            if (diag >= 0) {
                swap_rows_cols(p, diag);
            } else {
                int off = -1;
                for (int q = p + 1; q < n; ++q)
                    if (m(p, q) != 0) { off = q; break; }
                if (off < 0) continue;  // row p is zero in the trailing block
                const int q = off;
                for (int c = 0; c < n; ++c) {
                    const Rational rp = m(p, c), rq = m(q, c);
                    m(p, c) = rp + rq;
                    m(q, c) = rp - rq;
                }
                for (int r = 0; r < n; ++r) {
                    const Rational cp = m(r, p), cq = m(r, q);
                    m(r, p) = cp + cq;
                    m(r, q) = cp - cq;
                }
            }
        }
        if (m(p, p) == 0) continue;
        for (int r = p + 1; r < n; ++r) {
            if (m(r, p) == 0) continue;
            const Rational f = m(r, p) / m(p, p);
            for (int c = 0; c < n; ++c) m(r, c) -= f * m(p, c);
            for (int c = 0; c < n; ++c) m(c, r) -= f * m(c, p);
        }
    }

    Signature sig;
    for (int i = 0; i < n; ++i) {
        if (m(i, i) > 0) ++sig.positive;
        else if (m(i, i) < 0) ++sig.negative;
        else ++sig.zero;
    }
    return sig;
}

}  // namespace cyvol
