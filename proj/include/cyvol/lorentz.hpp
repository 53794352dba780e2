#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cyvol/ambient.hpp"
#include "cyvol/error.hpp"
#include "cyvol/linalg.hpp"
#include "cyvol/rational.hpp"
#include "cyvol/scalar.hpp"

namespace cyvol {

// Symmetric pairing matrix on the minimal-factor classes: unit diagonal,
// off-diagonal -b_jk/2. Rows are tagged with the ambient factor indices they
// came from; the derived pairing matrix -B^{-1} is computed once on demand.
class GramMatrix {
public:
    GramMatrix(std::vector<int> indices, Matrix<Rational> entries)
        : indices_(std::move(indices)), entries_(std::move(entries)),
          cache_(std::make_shared<Cache>()) {
        require(entries_.rows() == entries_.cols() &&
                    entries_.rows() == static_cast<int>(indices_.size()),
                "ShapeMismatch", "Gram matrix shape does not match index list");
    }

    int size() const { return entries_.rows(); }
    const std::vector<int>& indices() const { return indices_; }
    const Matrix<Rational>& entries() const { return entries_; }

    int row_of(int j) const {
        const auto it = std::find(indices_.begin(), indices_.end(), j);
        require(it != indices_.end(), "NotInJ", "index is not a minimal factor",
                {{"index", std::to_string(j + 1)}});
        return static_cast<int>(it - indices_.begin());
    }

    // -B^{-1}, the matrix of <h_i, h_j> values.
    const Matrix<Rational>& pairing_matrix() const {
        std::call_once(cache_->once, [&] {
            Matrix<Rational> inv = inverse(entries_);  // throws SingularGram
            for (int i = 0; i < inv.rows(); ++i)
                for (int j = 0; j < inv.cols(); ++j) inv(i, j) = -inv(i, j);
            cache_->pairing = std::make_shared<const Matrix<Rational>>(std::move(inv));
        });
        return *cache_->pairing;
    }

private:
    struct Cache {
        std::once_flag once;
        std::shared_ptr<const Matrix<Rational>> pairing;
    };

    std::vector<int> indices_;
    Matrix<Rational> entries_;
    mutable std::shared_ptr<Cache> cache_;
};

inline GramMatrix gram_from_ambient(const AmbientSpace& space) {
    const std::vector<int> J = j_set(space);
    require(!J.empty(), "EmptySubset", "no factor dimension equals the divisor count");
    const int m = static_cast<int>(J.size());
    Matrix<Rational> b(m, m);
    for (int r = 0; r < m; ++r) {
        b(r, r) = 1;
        for (int c = 0; c < m; ++c) {
            if (r == c) continue;
            b(r, c) = Rational(-b_coefficient(space, J[r], J[c])) / 2;
        }
    }
    return GramMatrix(J, std::move(b));
}

inline bool is_lorentzian(const GramMatrix& b) {
    return signature(b.entries()) == Signature{b.size() - 1, 1, 0};
}

// Bilinear pairing <u, v> = -u^T B^{-1} v in the h-coordinate basis of the
// Gram matrix. Exact for exact scalars.
template <class T>
T pairing(const GramMatrix& b, const std::vector<T>& u, const std::vector<T>& v) {
    const int m = b.size();
    require(static_cast<int>(u.size()) == m && static_cast<int>(v.size()) == m,
            "ShapeMismatch", "pairing arguments must have the Gram dimension");
    const Matrix<Rational>& p = b.pairing_matrix();
    T total = ScalarTraits<T>::from_rational(Rational(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            total += u[i] * ScalarTraits<T>::from_rational(p(i, j)) * v[j];
    return total;
}

// alpha_j = -sum_k B_kj h_k, expressed in the same h-coordinates; satisfies
// <h_i, alpha_j> = delta_ij.
inline std::vector<Rational> dual_root(const GramMatrix& b, int j) {
    const int col = b.row_of(j);
    std::vector<Rational> out(b.size());
    for (int k = 0; k < b.size(); ++k) out[k] = -b.entries()(k, col);
    return out;
}

// The structured family: blocks of sizes alphas[0..k-1], unit diagonal,
// off-diagonal -n inside a block and -n-1/2 across blocks.
inline Matrix<Rational> block_gram(const std::vector<int>& alphas, int n) {
    require(!alphas.empty(), "EmptySubset", "block size list is empty");
    require(n >= 1, "IndexOutOfRange", "block parameter n must be positive");
    int l = 0;
    std::vector<int> owner;
    for (size_t b = 0; b < alphas.size(); ++b) {
        require(alphas[b] >= 1, "IndexOutOfRange", "block sizes must be positive");
        for (int t = 0; t < alphas[b]; ++t) owner.push_back(static_cast<int>(b));
        l += alphas[b];
    }
    require(l >= 2, "IndexOutOfRange", "block family needs total size at least 2");
    Matrix<Rational> m(l, l);
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < l; ++c) {
            if (r == c) m(r, c) = 1;
            else if (owner[r] == owner[c]) m(r, c) = -n;
            else m(r, c) = Rational(-2 * n - 1, 2);
        }
    return m;
}

// k x k Schur-style reduction of block_gram after quotienting each block by
// its (n+1)-eigenspace: diagonal 1-(alpha_i-1)n, column j entries -(n+1/2)alpha_j.
inline Matrix<Rational> block_reduced_matrix(const std::vector<int>& alphas, int n) {
    const int k = static_cast<int>(alphas.size());
    Matrix<Rational> a(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) a(i, j) = 1 - Rational(alphas[i] - 1) * n;
            else a(i, j) = -Rational(2 * n + 1, 2) * alphas[j];
        }
    return a;
}

// Closed-form determinant of the reduced matrix, valid for ascending block
// sizes: (1-(a_1-1)n) prod_{i>=2}(1+n+a_i/2)
//        - sum_{i>=2} (n+1/2) a_i prod_{j != i}(1+n+a_j/2).
inline Rational block_reduced_det(const std::vector<int>& alphas, int n) {
    require(std::is_sorted(alphas.begin(), alphas.end()), "NotSorted",
            "block sizes must be ascending");
    const int k = static_cast<int>(alphas.size());
    require(k >= 1, "EmptySubset", "block size list is empty");
    auto base = [&](int i) { return Rational(1 + n) + Rational(alphas[i], 2); };
    Rational first = 1 - Rational(alphas[0] - 1) * n;
    for (int i = 1; i < k; ++i) first *= base(i);
    Rational second(0);
    for (int i = 1; i < k; ++i) {
        Rational prod = Rational(2 * n + 1, 2) * alphas[i];
        for (int j = 0; j < k; ++j)
            if (j != i) prod *= base(j);
        second += prod;
    }
    return first - second;
}

}  // namespace cyvol
