#pragma once

#include <cmath>
#include <type_traits>

#include "cyvol/quadratic.hpp"
#include "cyvol/rational.hpp"

namespace cyvol {

// Uniform operations over the scalar types the geometry templates accept:
// exact rationals, exact quadratic field elements, and plain doubles.
// Exact types compare against zero exactly; doubles get a small slack so that
// accumulated rounding never flags a genuinely nonnegative coordinate.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_negative(const Rational& x) { return x < 0; }
    static bool is_positive(const Rational& x) { return x > 0; }
    static bool is_zero(const Rational& x) { return x == 0; }
    static bool is_finite(const Rational&) { return true; }
    static double to_double(const Rational& x) { return cyvol::to_double(x); }
};

template <>
struct ScalarTraits<QuadExt> {
    static constexpr bool exact = true;
    static QuadExt from_rational(const Rational& r) { return QuadExt(r); }
    static bool is_negative(const QuadExt& x) { return x.sign() < 0; }
    static bool is_positive(const QuadExt& x) { return x.sign() > 0; }
    static bool is_zero(const QuadExt& x) { return x.sign() == 0; }
    static bool is_finite(const QuadExt&) { return true; }
    static double to_double(const QuadExt& x) { return x.to_double(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr double negativity_slack = 1e-12;
    static double from_rational(const Rational& r) { return cyvol::to_double(r); }
    static bool is_negative(double x) { return x < -negativity_slack; }
    static bool is_positive(double x) { return x > negativity_slack; }
    static bool is_zero(double x) { return !is_negative(x) && !is_positive(x); }
    static bool is_finite(double x) { return std::isfinite(x); }
    static double to_double(double x) { return x; }
};

}  // namespace cyvol
