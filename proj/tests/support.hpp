#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cyvol/cyvol.hpp"

// Shared fixtures and independent oracles for the test suite. The oracles
// deliberately use different algorithms from the library (dense-array
// expansion, Bareiss determinants, Descartes root counting) so that agreement
// is meaningful.
namespace ts {

using cyvol::AmbientSpace;
using cyvol::Int;
using cyvol::Matrix;
using cyvol::Rational;

// Degree (2,2,3) hypersurface in P^1 x P^1 x P^2.
inline AmbientSpace p112() { return AmbientSpace({1, 1, 2}, {{2, 2, 3}}); }

// Triple of (1,1,2)-permuted divisors in P^3 x P^3 x P^3.
inline AmbientSpace p333() {
    return AmbientSpace({3, 3, 3}, {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
}

// Two divisors in P^2 x P^3 x P^4; the minimal factor is unique.
inline AmbientSpace p234() {
    return AmbientSpace({2, 3, 4}, {{1, 2, 2}, {2, 2, 3}});
}

// Bare P^1 with no defining divisors, for the projective-bundle examples.
inline AmbientSpace p1() { return AmbientSpace({1}, {}, false); }

template <class F>
std::string error_code_of(F&& f) {
    try {
        f();
    } catch (const cyvol::Error& e) {
        return e.code();
    }
    return "";
}

inline std::vector<Rational> rat_vec(std::initializer_list<long long> xs) {
    std::vector<Rational> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

inline std::vector<double> dbl_vec(const std::vector<Rational>& v) {
    std::vector<double> out;
    for (const auto& x : v) out.push_back(cyvol::to_double(x));
    return out;
}

// Uniform random strict Calabi-Yau configuration: l in [2,6], factors in
// [1,5] with sum >= 4 and != (2,2), divisor count equal to the minimal factor
// dimension, each degree column a random composition of n_i + 1.
// With restrict_scope, additionally demands |J| >= 2 and not (n = 1, |J| = 2).
inline AmbientSpace random_strict_space(std::mt19937& rng, bool restrict_scope) {
    for (;;) {
        std::uniform_int_distribution<int> lwidth(2, 6), fdim(1, 5);
        const int l = lwidth(rng);
        std::vector<int> factors(l);
        for (int& f : factors) f = fdim(rng);
        if (std::accumulate(factors.begin(), factors.end(), 0) < 4) continue;
        if (factors == std::vector<int>{2, 2}) continue;
        const int n = *std::min_element(factors.begin(), factors.end());
        if (restrict_scope) {
            const int jsize =
                static_cast<int>(std::count(factors.begin(), factors.end(), n));
            if (jsize < 2) continue;
            if (n == 1 && jsize == 2) continue;
        }
        // Random composition of factors[i] + 1 into n positive parts, per column.
        std::vector<std::vector<int>> degrees(n, std::vector<int>(l, 1));
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            int extra = factors[i] + 1 - n;  // >= 1 since n <= factors[i]
            if (extra < 0) { ok = false; break; }
            std::uniform_int_distribution<int> row(0, n - 1);
            for (int t = 0; t < extra; ++t) degrees[row(rng)][i] += 1;
        }
        if (!ok) continue;
        return AmbientSpace(std::move(factors), std::move(degrees));
    }
}

// Full product of the degree rows as a dense coefficient array over the
// exponent box prod (n_i + 1), with H_i^(n_i+1) = 0. Independent of the
// library's sparse-map representation.
class DenseClass {
public:
    explicit DenseClass(const AmbientSpace& s) : dims_(s.l()) {
        size_t total = 1;
        for (int i = 0; i < s.l(); ++i) {
            dims_[i] = s.factors()[i] + 1;
            total *= static_cast<size_t>(dims_[i]);
        }
        strides_.assign(s.l(), 1);
        for (int i = s.l() - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * dims_[i + 1];
        coeffs_.assign(total, Rational(0));
        coeffs_[0] = 1;
        for (const auto& row : s.degrees()) {
            std::vector<Rational> next(total, Rational(0));
            for (size_t idx = 0; idx < total; ++idx) {
                if (coeffs_[idx] == 0) continue;
                for (int i = 0; i < s.l(); ++i) {
                    if (exponent(idx, i) + 1 >= dims_[i]) continue;
                    next[idx + strides_[i]] += coeffs_[idx] * row[i];
                }
            }
            coeffs_ = std::move(next);
        }
    }

    Rational coefficient(const std::vector<int>& mono) const {
        size_t idx = 0;
        for (size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] >= dims_[i]) return Rational(0);
            idx += static_cast<size_t>(mono[i]) * strides_[i];
        }
        return coeffs_[idx];
    }

    std::map<std::vector<int>, Rational> nonzero_terms() const {
        std::map<std::vector<int>, Rational> out;
        for (size_t idx = 0; idx < coeffs_.size(); ++idx) {
            if (coeffs_[idx] == 0) continue;
            std::vector<int> mono(dims_.size());
            for (size_t i = 0; i < dims_.size(); ++i) mono[i] = exponent(idx, i);
            out[mono] = coeffs_[idx];
        }
        return out;
    }

private:
    int exponent(size_t idx, int i) const {
        return static_cast<int>((idx / strides_[i]) % static_cast<size_t>(dims_[i]));
    }

    std::vector<int> dims_;
    std::vector<size_t> strides_;
    std::vector<Rational> coeffs_;
};

// Fraction-free Bareiss determinant, written against plain vectors so it
// shares no code with the library's Gaussian elimination.
inline Rational bareiss_det(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Rational(1);
    Rational prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { swap = r; break; }
            if (swap < 0) return Rational(0);
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// det(tI - A) by evaluating the Bareiss determinant at n+1 integer points and
// Lagrange-interpolating the coefficients.
inline std::vector<Rational> charpoly_oracle(const Matrix<Rational>& a) {
    const int n = a.rows();
    std::vector<Rational> points, values;
    for (int t = 0; t <= n; ++t) {
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = (i == j ? Rational(t) : Rational(0)) - a(i, j);
        points.emplace_back(t);
        values.push_back(bareiss_det(std::move(m)));
    }
    // Newton's divided differences, then expand to monomial coefficients.
    std::vector<Rational> dd = values;
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i] - points[i - level]);
    std::vector<Rational> coeffs(n + 1, Rational(0));
    std::vector<Rational> basis{Rational(1)};  // prod (t - points[j]) so far
    for (int i = 0; i <= n; ++i) {
        for (size_t j = 0; j < basis.size(); ++j) coeffs[j] += dd[i] * basis[j];
        if (i < n) {
            basis.push_back(Rational(0));
            for (int j = static_cast<int>(basis.size()) - 1; j >= 1; --j)
                basis[j] = basis[j - 1] - points[i] * basis[j];
            basis[0] = -points[i] * basis[0];
        }
    }
    return coeffs;
}

// Inertia of a symmetric rational matrix via Descartes' rule on the
// characteristic polynomial; exact because all eigenvalues are real.
inline cyvol::Signature signature_oracle(const Matrix<Rational>& a) {
    const std::vector<Rational> p = charpoly_oracle(a);
    int zeros = 0;
    while (zeros < static_cast<int>(p.size()) - 1 && p[zeros] == 0) ++zeros;
    auto variations = [&](bool flip_odd) {
        int count = 0, last = 0;
        for (size_t i = zeros; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            int s = p[i] > 0 ? 1 : -1;
            if (flip_odd && (i % 2 == 1)) s = -s;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    cyvol::Signature sig;
    sig.positive = variations(false);
    sig.negative = variations(true);
    sig.zero = zeros;
    return sig;
}

inline cyvol::Word random_reduced_word(std::mt19937& rng, int letters, int length) {
    std::uniform_int_distribution<int> pick(0, letters - 1);
    cyvol::Word w;
    int prev = -1;
    while (static_cast<int>(w.size()) < length) {
        const int c = pick(rng);
        if (c == prev) continue;
        w.push_back(c);
        prev = c;
    }
    return w;
}

inline std::vector<Rational> random_rational_vector(std::mt19937& rng, int size,
                                                    int lo = -6, int hi = 6) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, 4);
    std::vector<Rational> v(size);
    for (auto& x : v) x = Rational(num(rng), den(rng));
    return v;
}

}  // namespace ts
