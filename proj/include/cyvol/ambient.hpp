#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "cyvol/error.hpp"
#include "cyvol/rational.hpp"
#include "cyvol/scalar.hpp"

namespace cyvol {

// Polynomial in the hyperplane classes H_1..H_l (equivalently in l scalar
// variables), stored as exponent vector -> nonzero rational coefficient.
// Exponents are truncated against the factor dimensions where requested,
// since H_i^{e} = 0 on P^{n_i} for e > n_i.
class MultidegPolynomial {
public:
    using Monomial = std::vector<int>;
    using TermMap = std::map<Monomial, Rational>;

    explicit MultidegPolynomial(int vars) : vars_(vars) {}

    static MultidegPolynomial one(int vars) {
        MultidegPolynomial p(vars);
        p.terms_[Monomial(vars, 0)] = 1;
        return p;
    }

    int vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Multiply by the linear form sum_i coeffs[i] * H_i, dropping every
    // monomial whose i-th exponent would exceed caps[i].
    MultidegPolynomial times_linear(const std::vector<Rational>& coeffs,
                                    const std::vector<int>& caps) const {
        MultidegPolynomial out(vars_);
        for (const auto& [mono, c] : terms_)
            for (int i = 0; i < vars_; ++i) {
                if (coeffs[i] == 0 || mono[i] + 1 > caps[i]) continue;
                Monomial m = mono;
                ++m[i];
                out.add_term(m, c * coeffs[i]);
            }
        return out;
    }

    int total_degree() const {
        int deg = 0;
        for (const auto& [mono, c] : terms_)
            deg = std::max(deg, std::accumulate(mono.begin(), mono.end(), 0));
        return deg;
    }

    template <class T>
    T evaluate(const std::vector<T>& v) const {
        require(static_cast<int>(v.size()) == vars_, "ShapeMismatch",
                "evaluation point has wrong dimension");
        T total = ScalarTraits<T>::from_rational(Rational(0));
        for (const auto& [mono, c] : terms_) {
            T term = ScalarTraits<T>::from_rational(c);
            for (int i = 0; i < vars_; ++i)
                for (int e = 0; e < mono[i]; ++e) term *= v[i];
            total += term;
        }
        return total;
    }

    friend bool operator==(const MultidegPolynomial& a, const MultidegPolynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    int vars_;
    TermMap terms_;
};

class AmbientSpace {
public:
    AmbientSpace(std::vector<int> factors, std::vector<std::vector<int>> degrees,
                 bool strict_cy = true)
        : factors_(std::move(factors)),
          degrees_(std::move(degrees)),
          strict_cy_(strict_cy),
          cache_(std::make_shared<Cache>()) {
        validate();
    }

    const std::vector<int>& factors() const { return factors_; }
    const std::vector<std::vector<int>>& degrees() const { return degrees_; }
    bool strict_cy() const { return strict_cy_; }

    int l() const { return static_cast<int>(factors_.size()); }
    int n() const { return static_cast<int>(degrees_.size()); }
    int dim() const { return std::accumulate(factors_.begin(), factors_.end(), 0) - n(); }
    int min_factor() const { return *std::min_element(factors_.begin(), factors_.end()); }

private:
    struct Cache {
        std::once_flag class_once, vol_once;
        std::shared_ptr<const MultidegPolynomial> class_poly, vol_poly;
    };

    void validate() const {
        require(!factors_.empty(), "InvalidSpace", "factor list is empty");
        for (int ni : factors_)
            require(ni >= 1, "InvalidSpace", "factor dimensions must be positive");
        for (const auto& row : degrees_) {
            require(static_cast<int>(row.size()) == l(), "InvalidSpace",
                    "degree row length does not match factor count");
            for (int d : row)
                require(d >= 1, "InvalidSpace", "degree entries must be positive (ample)");
        }
        require(n() <= min_factor(), "InvalidSpace",
                "more defining divisors than the smallest factor dimension",
                {{"n", std::to_string(n())}, {"min_factor", std::to_string(min_factor())}});
        if (strict_cy_) {
            for (int i = 0; i < l(); ++i) {
                int col = 0;
                for (const auto& row : degrees_) col += row[i];
                require(col == factors_[i] + 1, "InvalidSpace",
                        "column sum must equal n_i + 1 for a Calabi-Yau intersection",
                        {{"column", std::to_string(i + 1)},
                         {"sum", std::to_string(col)},
                         {"expected", std::to_string(factors_[i] + 1)}});
            }
            const int total = std::accumulate(factors_.begin(), factors_.end(), 0);
            require(total >= 4, "InvalidSpace", "strict mode requires total dimension >= 4");
            require(!(factors_ == std::vector<int>{2, 2}), "InvalidSpace",
                    "strict mode excludes the (2,2) factor pair");
        }
    }

    std::vector<int> factors_;
    std::vector<std::vector<int>> degrees_;
    bool strict_cy_;
    mutable std::shared_ptr<Cache> cache_;

    friend const MultidegPolynomial& class_of_x(const AmbientSpace&);
    friend const MultidegPolynomial& volume_polynomial(const AmbientSpace&);
};

// Truncated product of the defining divisor classes prod_k (sum_i d_ki H_i).
inline const MultidegPolynomial& class_of_x(const AmbientSpace& space) {
    auto& cache = *space.cache_;
    std::call_once(cache.class_once, [&] {
        MultidegPolynomial p = MultidegPolynomial::one(space.l());
        for (const auto& row : space.degrees()) {
            std::vector<Rational> coeffs(row.begin(), row.end());
            p = p.times_linear(coeffs, space.factors());
        }
        cache.class_poly = std::make_shared<const MultidegPolynomial>(std::move(p));
    });
    return *cache.class_poly;
}

// Indices of the minimal-dimension factors, 0-based. These carry the
// reflection involutions exactly when the divisor count equals the minimum;
// below it the set is still the argmin and callers flag the regime.
inline std::vector<int> j_set(const AmbientSpace& space) {
    std::vector<int> out;
    for (int j = 0; j < space.l(); ++j)
        if (space.factors()[j] == space.min_factor()) out.push_back(j);
    return out;
}

// Coefficient of H_i * H_j^{n-1} in the class of X. 0-based indices.
inline Int b_coefficient(const AmbientSpace& space, int i, int j) {
    require(i >= 0 && i < space.l() && j >= 0 && j < space.l(), "IndexOutOfRange",
            "factor index out of range",
            {{"i", std::to_string(i + 1)}, {"j", std::to_string(j + 1)}});
    require(i != j, "IndexOutOfRange", "b coefficient requires distinct indices");
    const auto J = j_set(space);
    require(std::find(J.begin(), J.end(), j) != J.end(), "NotInJ",
            "second index must lie in the minimal-factor set",
            {{"j", std::to_string(j + 1)}});
    MultidegPolynomial::Monomial m(space.l(), 0);
    m[i] += 1;
    m[j] += space.n() - 1;
    const Rational c = class_of_x(space).coefficient(m);
    return numerator(c);
}

// Coefficient of the top monomial H_1^{n_1}...H_l^{n_l} in
// (sum_i coeffs_i H_i)^{dim X} * [X], by direct truncated expansion.
inline Rational top_intersection(const AmbientSpace& space, const std::vector<Rational>& coeffs) {
    require(static_cast<int>(coeffs.size()) == space.l(), "ShapeMismatch",
            "coefficient vector has wrong dimension");
    MultidegPolynomial p = class_of_x(space);
    for (int step = 0; step < space.dim(); ++step)
        p = p.times_linear(coeffs, space.factors());
    MultidegPolynomial::Monomial top(space.factors().begin(), space.factors().end());
    return p.coefficient(top);
}

// Homogeneous polynomial v -> top_intersection(space, v) of degree dim X,
// computed once per space: each monomial H^e of [X] contributes the
// multinomial count of ways to fill the complementary exponents from the
// ample power.
inline const MultidegPolynomial& volume_polynomial(const AmbientSpace& space) {
    auto& cache = *space.cache_;
    std::call_once(cache.vol_once, [&] {
        const int l = space.l();
        const int d = space.dim();
        MultidegPolynomial vol(l);
        const Int dfact = factorial(d);
        for (const auto& [mono, c] : class_of_x(space).terms()) {
            MultidegPolynomial::Monomial f(l);
            bool ok = true;
            Int denom = 1;
            for (int i = 0; i < l; ++i) {
                f[i] = space.factors()[i] - mono[i];
                if (f[i] < 0) { ok = false; break; }
                denom *= factorial(f[i]);
            }
            if (!ok) continue;
            vol.add_term(f, c * Rational(dfact, denom));
        }
        cache.vol_poly = std::make_shared<const MultidegPolynomial>(std::move(vol));
    });
    return *cache.vol_poly;
}

// The returned references live in the space's cache, so a temporary space
// would leave them dangling; force callers to keep the space alive.
const MultidegPolynomial& class_of_x(AmbientSpace&&) = delete;
const MultidegPolynomial& volume_polynomial(AmbientSpace&&) = delete;

// Sub-ambient on the chosen factor indices (0-based, strictly increasing);
// degree rows keep only the chosen columns. Restrictions are generally not
// Calabi-Yau, so the strict flag is dropped.
inline AmbientSpace restrict_to(const AmbientSpace& space, const std::vector<int>& subset) {
    require(!subset.empty(), "EmptySubset", "restriction subset is empty");
    for (size_t k = 0; k < subset.size(); ++k) {
        require(subset[k] >= 0 && subset[k] < space.l(), "IndexOutOfRange",
                "restriction index out of range", {{"index", std::to_string(subset[k] + 1)}});
        require(k == 0 || subset[k] > subset[k - 1], "IndexOutOfRange",
                "restriction indices must be strictly increasing");
    }
    std::vector<int> factors;
    for (int s : subset) factors.push_back(space.factors()[s]);
    std::vector<std::vector<int>> degrees;
    for (const auto& row : space.degrees()) {
        std::vector<int> r;
        for (int s : subset) r.push_back(row[s]);
        degrees.push_back(std::move(r));
    }
    return AmbientSpace(std::move(factors), std::move(degrees), false);
}

}  // namespace cyvol
