#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cyvol/ambient.hpp"
#include "cyvol/error.hpp"
#include "cyvol/scalar.hpp"
#include "cyvol/volume.hpp"
#include "cyvol/weyl.hpp"

namespace cyvol {

// Generators of the word cone w(Nef) for the alternating word (1,2,1,...) of
// length m on the three-factor threefold: closed forms for w(h1), w(h2), and
// the fixed ray h3.
inline std::vector<std::vector<Int>> word_cone_generators(int m) {
    require(m >= 2, "LengthTooShort", "word cone needs length at least 2",
            {{"length", std::to_string(m)}});
    const long long n = m / 2;
    std::vector<Int> wh1, wh2{-2 * n, 2 * n + 1, 6 * n * n + 3 * n};
    if (m % 2 == 0)
        wh1 = {-2 * n + 1, 2 * n, 6 * n * n - 3 * n};
    else
        wh1 = {-2 * n - 1, 2 * n + 2, 6 * n * n + 9 * n + 3};
    return {wh1, wh2, {0, 0, 1}};
}

// The affine plane {a x + b y + z = k} used to slice word cones.
struct PlaneSlice {
    Rational a, b, k;
};

struct SliceTriangle {
    std::array<std::vector<Rational>, 3> vertices;
};

// Intersect the three generator rays with the plane: the ray through g meets
// it at k g / (a g1 + b g2 + g3), which must have positive denominator.
inline SliceTriangle slice_triangle(const std::vector<std::vector<Int>>& generators,
                                    const PlaneSlice& plane) {
    require(generators.size() == 3, "ShapeMismatch", "slice needs exactly three generators");
    require(plane.k > 0, "NonTransverse", "plane level must be positive");
    SliceTriangle tri;
    for (int g = 0; g < 3; ++g) {
        require(generators[g].size() == 3, "ShapeMismatch", "generators must be 3-dimensional");
        const Rational den = plane.a * Rational(generators[g][0]) +
                             plane.b * Rational(generators[g][1]) + Rational(generators[g][2]);
        require(den > 0, "NonTransverse", "plane does not cross this generator ray",
                {{"generator", std::to_string(g + 1)}});
        std::vector<Rational> vertex(3);
        for (int c = 0; c < 3; ++c) vertex[c] = plane.k * Rational(generators[g][c]) / den;
        tri.vertices[g] = std::move(vertex);
    }
    return tri;
}

struct TriangleIntegralParts {
    Rational simplex_integral;  // exact integral of the pulled-back cubic over the 2-simplex
    double area_element = 0;    // Euclidean area factor |e1 x e2|
    double value = 0;           // simplex_integral * area_element
    Word chamber_word;          // reflection word taking the triangle into the nef chamber
};

// Integrate the volume function over a plane triangle that lies in a single
// reflection chamber. The chamber word comes from the centroid; the exact
// simplex integral uses the reduced vertices, the area factor the original
// ones. A triangle that crosses chamber walls is rejected.
inline TriangleIntegralParts integrate_vol_over_triangle_parts(const AmbientSpace& space,
                                                               const SliceTriangle& tri,
                                                               int max_iter = 10000) {
    require(space.dim() == 3 && space.l() == 3, "ShapeMismatch",
            "triangle integration needs a threefold with three factors");
    const auto& v = tri.vertices;
    for (const auto& vert : v)
        require(vert.size() == 3, "ShapeMismatch", "triangle vertices must be 3-dimensional");

    TriangleIntegralParts out;
    Rational g11(0), g22(0), g12(0);
    for (int c = 0; c < 3; ++c) {
        const Rational e1 = v[1][c] - v[0][c];
        const Rational e2 = v[2][c] - v[0][c];
        g11 += e1 * e1;
        g22 += e2 * e2;
        g12 += e1 * e2;
    }
    const Rational gram_det = g11 * g22 - g12 * g12;
    if (gram_det == 0) return out;  // degenerate triangle has zero area

    std::vector<Rational> centroid(3);
    for (int c = 0; c < 3; ++c) centroid[c] = (v[0][c] + v[1][c] + v[2][c]) / 3;
    ReduceResult<Rational> red;
    try {
        red = reduce_to_nef(space, centroid, max_iter);
    } catch (const Error& e) {
        fail("DegenerateTriangle", "triangle centroid does not reduce to the nef chamber",
             {{"cause", e.code()}});
    }
    out.chamber_word = red.word;

    std::array<std::vector<Rational>, 3> w;
    for (int i = 0; i < 3; ++i) {
        w[i] = apply_word(space, red.word, v[i]);
        for (const Rational& x : w[i])
            require(x >= 0, "DegenerateTriangle", "triangle crosses a chamber wall");
    }

    // Pull back through x(u, t) = W0 + u (W1 - W0) + t (W2 - W0), homogenized
    // with a third slack variable so the affine substitution stays linear.
    const int deg = space.dim();
    const std::vector<int> caps(3, deg);
    MultidegPolynomial pulled(3);
    for (const auto& [mono, coeff] : volume_polynomial(space).terms()) {
        MultidegPolynomial term = MultidegPolynomial::one(3);
        for (int m = 0; m < 3; ++m) {
            const std::vector<Rational> affine{w[0][m], w[1][m] - w[0][m], w[2][m] - w[0][m]};
            for (int e = 0; e < mono[m]; ++e) term = term.times_linear(affine, caps);
        }
        for (const auto& [m2, c2] : term.terms()) pulled.add_term(m2, coeff * c2);
    }
    Rational integral(0);
    for (const auto& [mono, coeff] : pulled.terms()) {
        const int p = mono[1], q = mono[2];
        integral += coeff * Rational(factorial(p) * factorial(q), factorial(p + q + 2));
    }
    out.simplex_integral = integral;
    out.area_element = std::sqrt(to_double(gram_det));
    out.value = to_double(integral) * out.area_element;
    return out;
}

inline double integrate_vol_over_triangle(const AmbientSpace& space, const SliceTriangle& tri,
                                          int max_iter = 10000) {
    return integrate_vol_over_triangle_parts(space, tri, max_iter).value;
}

namespace detail {

struct SummandFactors {
    Rational shared, first, second;  // the three denominator factors
};

inline SummandFactors summand_denominators(const Rational& n, const Rational& a,
                                           const Rational& b) {
    const Rational q = 3 * n * n;
    const Rational ab = a - b;
    SummandFactors f;
    f.shared = q - (ab - Rational(3, 2)) * n + b / 2;
    f.first = q - (ab + Rational(3, 2)) * n + a / 2;
    f.second = q - (ab - Rational(9, 2)) * n - a / 2 + b + Rational(3, 2);
    return f;
}

}  // namespace detail

struct SummandParts {
    Rational even_part;  // the fraction attached to even word lengths
    Rational odd_part;   // the fraction attached to odd word lengths
    Rational total;      // k^3/10 times the sum of the two displayed fractions
};

// The n-th term of the slice-volume series, as the two displayed rational
// fractions scaled by k^3/10. The even/odd naming records which word-cone
// parity each fraction integrates (established by the exact triangle oracle).
inline SummandParts series_summand_parts(long long n, const Rational& a, const Rational& b,
                                         const Rational& k) {
    require(n >= 1, "IndexOutOfRange", "series index must be positive");
    const Rational nr(n);
    const Rational q = 3 * nr * nr;
    const Rational ab = a - b;
    const auto den = detail::summand_denominators(nr, a, b);
    auto check = [&](const Rational& factor, const char* name) {
        require(factor != 0, "PoleAtN", "summand denominator vanishes",
                {{"n", std::to_string(n)}, {"factor", name}});
    };
    check(den.shared, "shared");
    check(den.first, "first");
    check(den.second, "second");
    const Rational f1_num = q - ab * nr + a / 4 + b / 4 + Rational(3, 8);
    const Rational f2_num = q - (ab - 3) * nr - a / 4 + 3 * b / 4 + Rational(9, 8);
    const Rational scale = k * k * k / 10;
    SummandParts parts;
    parts.even_part = scale * f1_num / (den.shared * den.first);
    parts.odd_part = scale * f2_num / (den.shared * den.second);
    parts.total = parts.even_part + parts.odd_part;
    return parts;
}

inline Rational series_summand(long long n, const Rational& a, const Rational& b,
                               const Rational& k) {
    return series_summand_parts(n, a, b, k).total;
}

struct SeriesResult {
    double partial_sum = std::numeric_limits<double>::quiet_NaN();
    long long terms = 0;
    double tail_bound = std::numeric_limits<double>::quiet_NaN();
    double closed_form = std::numeric_limits<double>::quiet_NaN();
    double alpha = std::numeric_limits<double>::quiet_NaN();
    double beta = std::numeric_limits<double>::quiet_NaN();
    // {1 - beta, 1 - alpha, 1/2 - beta, 1/2 - alpha}
    std::array<double, 4> digamma_args{std::numeric_limits<double>::quiet_NaN(),
                                       std::numeric_limits<double>::quiet_NaN(),
                                       std::numeric_limits<double>::quiet_NaN(),
                                       std::numeric_limits<double>::quiet_NaN()};
};

namespace detail {

inline double summand_double(double n, double a, double b, double k) {
    const double q = 3 * n * n;
    const double ab = a - b;
    const double shared = q - (ab - 1.5) * n + 0.5 * b;
    const double first = q - (ab + 1.5) * n + 0.5 * a;
    const double second = q - (ab - 4.5) * n - 0.5 * a + b + 1.5;
    require(shared != 0 && first != 0 && second != 0, "PoleAtN",
            "summand denominator vanishes", {{"n", std::to_string(static_cast<long long>(n))}});
    const double f1 = (q - ab * n + 0.25 * a + 0.25 * b + 0.375) / (shared * first);
    const double f2 = (q - (ab - 3) * n - 0.25 * a + 0.75 * b + 1.125) / (shared * second);
    return k * k * k / 10 * (f1 + f2);
}

}  // namespace detail

// Partial sum of the series with a rigorous O(1/N) tail majorant. Terms are
// accumulated with Kahan compensation inside fixed 4096-term blocks and the
// block sums combined in a fixed pairwise tree, so the result is independent
// of any parallel schedule.
inline SeriesResult series_partial_sum(long long n_terms, const Rational& a, const Rational& b,
                                       const Rational& k) {
    require(n_terms >= 1, "IndexOutOfRange", "need at least one term");
    const double ad = to_double(a), bd = to_double(b), kd = to_double(k);

    constexpr long long block_size = 4096;
    std::vector<double> blocks;
    double sum = 0, comp = 0;
    long long in_block = 0;
    for (long long n = 1; n <= n_terms; ++n) {
        const double term = detail::summand_double(static_cast<double>(n), ad, bd, kd);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (++in_block == block_size) {
            blocks.push_back(sum);
            sum = comp = 0;
            in_block = 0;
        }
    }
    if (in_block > 0) blocks.push_back(sum);
    while (blocks.size() > 1) {
        std::vector<double> next;
        for (size_t i = 0; i + 1 < blocks.size(); i += 2) next.push_back(blocks[i] + blocks[i + 1]);
        if (blocks.size() % 2 == 1) next.push_back(blocks.back());
        blocks = std::move(next);
    }

    double c_sup = 0;
    for (long long n = std::max<long long>(n_terms, 2); n <= 2 * n_terms; ++n) {
        const double nd = static_cast<double>(n);
        const double major = nd * nd * detail::summand_double(nd, ad, bd, kd) * nd / (nd - 1);
        c_sup = std::max(c_sup, major);
    }

    SeriesResult out;
    out.partial_sum = blocks.empty() ? 0.0 : blocks.front();
    out.terms = n_terms;
    out.tail_bound = c_sup / static_cast<double>(n_terms);
    return out;
}

// Digamma by upward recurrence past 12 and the standard asymptotic expansion.
inline double digamma(double x) {
    require(x > 0, "NonPositiveArgument", "digamma requires a positive argument");
    double acc = 0;
    while (x < 12) {
        acc -= 1 / x;
        x += 1;
    }
    const double inv = 1 / x, inv2 = inv * inv;
    double psi = std::log(x) - 0.5 * inv;
    psi -= inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240))));
    return acc + psi;
}

// Closed form of the full series: a digamma combination at the roots
// alpha > beta of 3x^2 - (a - b - 3/2)x + b/2.
inline SeriesResult v_closed_form(const Rational& a, const Rational& b, const Rational& k) {
    const Rational lin_mid = a - b - Rational(3, 2);
    const Rational disc = lin_mid * lin_mid - 6 * b;
    require(disc > 0, "DegenerateParameters", "root discriminant must be positive",
            {{"denominator", "discriminant"}});
    const Rational sym = a * a + b * b - 2 * a * b - 3 * a - 3 * b;
    require(sym != 0, "DegenerateParameters", "shared denominator vanishes",
            {{"denominator", "a^2+b^2-2ab-3a-3b"}});
    const Rational lin = a - 2 * b - 3;
    require(lin != 0, "DegenerateParameters", "rational-part denominator vanishes",
            {{"denominator", "a-2b-3"}});

    const double sq = std::sqrt(to_double(disc));
    const double mid = to_double(lin_mid);
    SeriesResult out;
    out.alpha = (mid + sq) / 6;
    out.beta = (mid - sq) / 6;
    out.digamma_args = {1 - out.beta, 1 - out.alpha, 0.5 - out.beta, 0.5 - out.alpha};

    const Rational k3 = k * k * k;
    const Rational num1 = 4 * a * a + 4 * b * b - 8 * a * b - 12 * a - 12 * b - 9;
    const Rational num2 = 2 * a * a + 2 * b * b - 4 * a * b - 3 * a - 9 * b - 18;
    const double alpha_minus_beta = sq / 3;
    const double c1 = to_double(k3 * num1 / (120 * sym)) / alpha_minus_beta;
    const double psi_part = digamma(out.digamma_args[2]) - digamma(out.digamma_args[3]) +
                            digamma(out.digamma_args[0]) - digamma(out.digamma_args[1]);
    out.closed_form = c1 * psi_part + to_double(k3 * num2 / (20 * lin * sym));
    return out;
}

// Exact projective-bundle volume when every divisor is nef: expand the volume
// polynomial at sum_i lambda_i A_i and integrate each lambda-monomial over the
// standard simplex via prod e_i! / (sum e + r)!.
inline Rational bundle_volume_exact(const AmbientSpace& space,
                                    const std::vector<std::vector<Rational>>& divisors) {
    const int r = static_cast<int>(divisors.size()) - 1;
    require(r >= 1, "ShapeMismatch", "need at least two divisor classes");
    for (const auto& d : divisors) {
        require(static_cast<int>(d.size()) == space.l(), "ShapeMismatch",
                "divisor class has wrong dimension");
        for (const Rational& x : d)
            require(x >= 0, "NotNef", "exact bundle volume needs nef divisor classes");
    }
    const int v = space.dim();
    const std::vector<int> caps(r + 1, v);
    MultidegPolynomial expanded(r + 1);
    for (const auto& [mono, coeff] : volume_polynomial(space).terms()) {
        MultidegPolynomial term = MultidegPolynomial::one(r + 1);
        for (int m = 0; m < space.l(); ++m) {
            std::vector<Rational> column(r + 1);
            for (int i = 0; i <= r; ++i) column[i] = divisors[i][m];
            for (int e = 0; e < mono[m]; ++e) term = term.times_linear(column, caps);
        }
        for (const auto& [m2, c2] : term.terms()) expanded.add_term(m2, coeff * c2);
    }
    Rational total(0);
    const Int vfact = factorial(v);
    for (const auto& [mono, coeff] : expanded.terms()) {
        Int prod = 1;
        for (int e : mono) prod *= factorial(e);
        total += coeff * Rational(prod, vfact);
    }
    return total;
}

struct BundleVolume {
    double value = 0;
    double error_estimate = 0;
    long long evaluations = 0;
    int levels = 0;
};

namespace detail {

using LambdaSimplex = std::vector<std::vector<double>>;  // r+1 vertices in R^r

inline double simplex_measure(const LambdaSimplex& s) {
    const int r = static_cast<int>(s.size()) - 1;
    std::vector<std::vector<double>> m(r, std::vector<double>(r));
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < r; ++c) m[i][c] = s[i + 1][c] - s[0][c];
    double det = 1;
    for (int p = 0; p < r; ++p) {
        int pivot = p;
        for (int q = p + 1; q < r; ++q)
            if (std::abs(m[q][p]) > std::abs(m[pivot][p])) pivot = q;
        if (m[pivot][p] == 0) return 0;
        if (pivot != p) {
            std::swap(m[pivot], m[p]);
            det = -det;
        }
        det *= m[p][p];
        for (int q = p + 1; q < r; ++q) {
            const double f = m[q][p] / m[p][p];
            for (int c = p; c < r; ++c) m[q][c] -= f * m[p][c];
        }
    }
    double fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    return std::abs(det) / fact;
}

// Quadrature exact through degree 2: vertices plus edge midpoints.
template <class F>
double simplex_quad2(const LambdaSimplex& s, F&& f, long long& evaluations) {
    const int r = static_cast<int>(s.size()) - 1;
    const double wv = (2.0 - r) / ((r + 1.0) * (r + 2.0));
    const double wm = 4.0 / ((r + 1.0) * (r + 2.0));
    double acc = 0;
    if (wv != 0)
        for (const auto& vert : s) {
            acc += wv * f(vert);
            ++evaluations;
        }
    std::vector<double> mid(r);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            for (int c = 0; c < r; ++c) mid[c] = 0.5 * (s[i][c] + s[j][c]);
            acc += wm * f(mid);
            ++evaluations;
        }
    return acc * simplex_measure(s);
}

inline void bisect_longest_edge(const LambdaSimplex& s, std::vector<LambdaSimplex>& out) {
    const int r = static_cast<int>(s.size()) - 1;
    double best = -1;
    int bi = 0, bj = 1;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            double len = 0;
            for (int c = 0; c < r; ++c) len += (s[i][c] - s[j][c]) * (s[i][c] - s[j][c]);
            if (len > best) {
                best = len;
                bi = static_cast<int>(i);
                bj = static_cast<int>(j);
            }
        }
    std::vector<double> mid(r);
    for (int c = 0; c < r; ++c) mid[c] = 0.5 * (s[bi][c] + s[bj][c]);
    LambdaSimplex a = s, b = s;
    a[bj] = mid;
    b[bi] = mid;
    out.push_back(std::move(a));
    out.push_back(std::move(b));
}

inline std::vector<LambdaSimplex> refine(const std::vector<LambdaSimplex>& level) {
    const int r = static_cast<int>(level.front().size()) - 1;
    std::vector<LambdaSimplex> next;
    if (r == 1) {
        for (const auto& s : level) {
            std::vector<double> mid{0.5 * (s[0][0] + s[1][0])};
            next.push_back({s[0], mid});
            next.push_back({mid, s[1]});
        }
    } else if (r == 2) {
        for (const auto& s : level) {
            auto mid = [&](int i, int j) {
                return std::vector<double>{0.5 * (s[i][0] + s[j][0]), 0.5 * (s[i][1] + s[j][1])};
            };
            const auto m01 = mid(0, 1), m02 = mid(0, 2), m12 = mid(1, 2);
            next.push_back({s[0], m01, m02});
            next.push_back({m01, s[1], m12});
            next.push_back({m02, m12, s[2]});
            next.push_back({m01, m12, m02});
        }
    } else {
        // cascade of longest-edge bisections: 2^r children per simplex
        std::vector<LambdaSimplex> work = level;
        for (int round = 0; round < r; ++round) {
            std::vector<LambdaSimplex> split;
            for (const auto& s : work) bisect_longest_edge(s, split);
            work = std::move(split);
        }
        next = std::move(work);
    }
    return next;
}

}  // namespace detail

// Adaptive projective-bundle volume: (d!/v!) times the integral of
// vol(sum lambda_i A_i) over the standard r-simplex, by uniform refinement of
// a degree-2 rule with Richardson extrapolation on the measured ratio.
inline BundleVolume bundle_volume(const AmbientSpace& space,
                                  const std::vector<std::vector<Rational>>& divisors,
                                  long long budget = 20000, int max_iter = 10000) {
    const int r = static_cast<int>(divisors.size()) - 1;
    require(r >= 1, "ShapeMismatch", "need at least two divisor classes");
    std::vector<std::vector<double>> a;
    for (const auto& d : divisors) {
        require(static_cast<int>(d.size()) == space.l(), "ShapeMismatch",
                "divisor class has wrong dimension");
        std::vector<double> row;
        for (const Rational& x : d) row.push_back(to_double(x));
        a.push_back(std::move(row));
    }

    auto f = [&](const std::vector<double>& lambda) {
        double l0 = 1;
        for (double x : lambda) l0 -= x;
        std::vector<double> cls(space.l());
        for (int m = 0; m < space.l(); ++m) {
            cls[m] = l0 * a[0][m];
            for (int i = 1; i <= r; ++i) cls[m] += lambda[i - 1] * a[i][m];
        }
        return vol(space, std::move(cls), max_iter);
    };

    std::vector<detail::LambdaSimplex> level;
    detail::LambdaSimplex base;
    base.push_back(std::vector<double>(r, 0.0));
    for (int i = 0; i < r; ++i) {
        std::vector<double> e(r, 0.0);
        e[i] = 1;
        base.push_back(std::move(e));
    }
    level.push_back(std::move(base));

    BundleVolume out;
    std::vector<double> estimates;
    const long long vertex_nodes = (r == 2) ? 0 : (r + 1);  // vertex weight vanishes at r = 2
    const long long nodes_per_simplex = vertex_nodes + static_cast<long long>(r + 1) * r / 2;
    for (;;) {
        const long long cost = static_cast<long long>(level.size()) * nodes_per_simplex;
        if (!estimates.empty() && out.evaluations + cost > budget) break;
        double total = 0;
        for (const auto& s : level) total += detail::simplex_quad2(s, f, out.evaluations);
        estimates.push_back(total);
        ++out.levels;
        const size_t t = estimates.size();
        if (t >= 2 && std::abs(estimates[t - 1] - estimates[t - 2]) <
                          1e-14 * std::max(1.0, std::abs(estimates[t - 1])))
            break;
        level = detail::refine(level);
    }

    const size_t t = estimates.size();
    double value = estimates.back();
    double err = t >= 2 ? std::abs(estimates[t - 1] - estimates[t - 2])
                        : std::abs(value);
    if (t >= 3) {
        const double d1 = estimates[t - 2] - estimates[t - 3];
        const double d2 = estimates[t - 1] - estimates[t - 2];
        if (d2 != 0) {
            const double rho = d1 / d2;
            if (rho > 1.1) {
                value += d2 / (rho - 1);
                err = std::abs(d2);
            }
        }
    }

    const int v = space.dim();
    double scale = 1;
    for (int i = v + 1; i <= v + r; ++i) scale *= i;
    out.value = value * scale;
    out.error_estimate = err * scale;
    return out;
}

}  // namespace cyvol
