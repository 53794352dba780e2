#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cyvol/ambient.hpp"
#include "cyvol/error.hpp"
#include "cyvol/scalar.hpp"
#include "cyvol/weyl.hpp"

namespace cyvol {

// On the nef cone the volume is the top self-intersection polynomial.
template <class T>
T vol_nef(const AmbientSpace& space, const std::vector<T>& v) {
    require(static_cast<int>(v.size()) == space.l(), "ShapeMismatch",
            "class has wrong dimension");
    for (int i = 0; i < space.l(); ++i)
        require(!ScalarTraits<T>::is_negative(v[i]), "NotNef",
                "class has a negative coordinate", {{"coordinate", std::to_string(i + 1)}});
    return volume_polynomial(space).template evaluate<T>(v);
}

// Volume anywhere on the movable effective cone: reduce into the nef chamber,
// then evaluate. Classes with a structurally negative coordinate outside the
// reflection set are not movable effective, so their volume is zero.
template <class T>
T vol(const AmbientSpace& space, std::vector<T> v, int max_iter = 10000) {
    try {
        const auto red = reduce_to_nef(space, std::move(v), max_iter);
        return vol_nef(space, red.reduced);
    } catch (const Error& e) {
        if (e.code() == "NonJNegative") return ScalarTraits<T>::from_rational(Rational(0));
        throw;
    }
}

struct AsymptoticReport {
    double slope = 0;
    double residual = 0;  // max |log vol - fit| over the fitted window
    std::vector<std::pair<double, double>> samples;  // (s, vol), s decreasing
    std::string predicted_class;  // "kn/2", "kn", or "unmatched"
    int predicted_k = 0;
    double predicted_exponent = 0;
};

namespace detail {

inline void classify_slope(AsymptoticReport& report, int n, int j_size) {
    struct Candidate { const char* label; int k; double value; };
    std::vector<Candidate> candidates;
    candidates.push_back({"kn/2", 1, n / 2.0});
    if (j_size - 1 >= 1 && j_size - 1 != 1)
        candidates.push_back({"kn/2", j_size - 1, (j_size - 1) * n / 2.0});
    for (int k = 1; k <= j_size - 2; ++k)
        candidates.push_back({"kn", k, static_cast<double>(k) * n});
    if (candidates.empty()) {
        report.predicted_class = "unmatched";
        return;
    }
    const Candidate* best = &candidates.front();
    for (const auto& c : candidates)
        if (std::abs(c.value - report.slope) < std::abs(best->value - report.slope)) best = &c;
    report.predicted_class = best->label;
    report.predicted_k = best->k;
    report.predicted_exponent = best->value;
}

}  // namespace detail

// Estimate the vanishing order of vol(p + sA) as s -> 0 along the dyadic grid
// s = 2^-m, m = m_lo..m_hi, from a log-log fit over the final 8 samples.
template <class T>
AsymptoticReport vol_asymptotic_exponent(const AmbientSpace& space, const std::vector<T>& p,
                                         const std::vector<T>& a, int m_lo = 8, int m_hi = 20,
                                         int max_iter = 10000) {
    require(static_cast<int>(p.size()) == space.l() &&
                static_cast<int>(a.size()) == space.l(),
            "ShapeMismatch", "class has wrong dimension");
    for (const T& x : a)
        require(ScalarTraits<T>::is_positive(x), "NotNef",
                "scaling direction must have strictly positive coordinates");
    require(m_lo <= m_hi, "IndexOutOfRange", "empty sample grid");

    AsymptoticReport report;
    std::vector<double> xs, ys;
    for (int m = m_lo; m <= m_hi; ++m) {
        const Rational s(Int(1), Int(1) << m);
        const T st = ScalarTraits<T>::from_rational(s);
        std::vector<T> v(space.l());
        for (int i = 0; i < space.l(); ++i) v[i] = p[i] + st * a[i];
        const double value = ScalarTraits<T>::to_double(vol(space, std::move(v), max_iter));
        require(value > 0, "ZeroVolumeSample", "volume vanished at a positive offset",
                {{"m", std::to_string(m)}});
        report.samples.emplace_back(std::ldexp(1.0, -m), value);
        xs.push_back(-m * std::log(2.0));
        ys.push_back(std::log(value));
    }

    const int total = static_cast<int>(xs.size());
    const int window = std::min(8, total);
    const int start = total - window;
    double mx = 0, my = 0;
    for (int i = start; i < total; ++i) { mx += xs[i]; my += ys[i]; }
    mx /= window;
    my /= window;
    double sxy = 0, sxx = 0;
    for (int i = start; i < total; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    report.slope = sxy / sxx;
    const double intercept = my - report.slope * mx;
    for (int i = start; i < total; ++i)
        report.residual = std::max(report.residual,
                                   std::abs(ys[i] - (intercept + report.slope * xs[i])));

    detail::classify_slope(report, space.n(), static_cast<int>(j_set(space).size()));
    return report;
}

// Same estimate computed on the sub-ambient spanned by the minimal factors,
// with the components of p and A restricted accordingly.
template <class T>
AsymptoticReport vol_asymptotic_via_restriction(const AmbientSpace& space,
                                                const std::vector<T>& p,
                                                const std::vector<T>& a, int m_lo = 8,
                                                int m_hi = 20, int max_iter = 10000) {
    const std::vector<int> J = j_set(space);
    const AmbientSpace sub = restrict_to(space, J);
    std::vector<T> ps, as;
    for (int j : J) {
        ps.push_back(p[j]);
        as.push_back(a[j]);
    }
    return vol_asymptotic_exponent(sub, ps, as, m_lo, m_hi, max_iter);
}

}  // namespace cyvol
