#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

#include "cyvol/rational.hpp"

namespace cyvol {

// Exact element a + b*sqrt(d) of a real quadratic field, d a positive non-square
// integer (square factors are folded into b, so values with equal d compose freely).
// Signs and comparisons are exact; doubles appear only on explicit conversion.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT: implicit by design
    QuadExt(long long a) : a_(a), b_(0), d_(0) {}            // NOLINT
    QuadExt(int a) : a_(a), b_(0), d_(0) {}                  // NOLINT

    QuadExt(Rational a, Rational b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        require(d_ >= 0, "NegativeDiscriminant", "sqrt of negative integer requested");
        reduce();
    }

    static QuadExt sqrt_of(const Int& d) { return QuadExt(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const Int& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        const Int d = merged_radicand(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        const Int d = merged_radicand(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        const Int d = merged_radicand(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        const Int d = merged_radicand(x, y);
        const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
        require(norm != 0, "DivisionByZero", "division by zero field element");
        // multiply by the conjugate (a - b sqrt(d)) / norm
        return QuadExt((x.a_ * y.a_ - x.b_ * y.b_ * Rational(d)) / norm,
                       (x.b_ * y.a_ - x.a_ * y.b_) / norm, d);
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // Exact sign of a + b*sqrt(d): decided by comparing a^2 against b^2 d when
    // the two parts disagree in sign.
    int sign() const {
        const int sa = a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
        if (b_ == 0) return sa;
        const int sb = b_ > 0 ? 1 : -1;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        const Rational lhs = a_ * a_;
        const Rational rhs = b_ * b_ * Rational(d_);
        if (lhs == rhs) return 0;
        return (lhs > rhs) ? sa : sb;
    }

    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    // Conversion goes through a wide float: a and b can be individually large
    // while a + b*sqrt(d) is tiny, and double intermediates would cancel.
    double to_double() const {
        if (b_ == 0) return cyvol::to_double(a_);
        using Wide = boost::multiprecision::cpp_bin_float_50;
        const Wide v = static_cast<Wide>(a_) + static_cast<Wide>(b_) * sqrt(static_cast<Wide>(d_));
        return v.convert_to<double>();
    }

    std::string str() const {
        if (b_ == 0) return cyvol::to_string(a_);
        return cyvol::to_string(a_) + " + " + cyvol::to_string(b_) + "*sqrt(" +
               cyvol::to_string(d_) + ")";
    }

private:
    // Fold square factors of d into b; collapse to the rational line when possible.
    void reduce() {
        if (b_ == 0 || d_ == 0) { b_ = 0; d_ = 0; return; }
        Int d = d_, square = 1;
        for (Int p = 2; p * p <= d; ++p)
            while (d % (p * p) == 0) { d /= p * p; square *= p; }
        if (square != 1) b_ *= Rational(square);
        if (d == 1) { a_ += b_; b_ = 0; d_ = 0; return; }
        d_ = d;
    }

    static Int merged_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        require(x.d_ == y.d_, "MixedRadicands",
                "arithmetic across distinct quadratic fields: sqrt(" + cyvol::to_string(x.d_) +
                    ") vs sqrt(" + cyvol::to_string(y.d_) + ")");
        return x.d_;
    }

    Rational a_, b_;
    Int d_;
};

inline double to_double(const QuadExt& x) { return x.to_double(); }

}  // namespace cyvol
