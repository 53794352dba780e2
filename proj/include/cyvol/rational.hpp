#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cyvol/error.hpp"

namespace cyvol {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& x) { return x.template convert_to<double>(); }
inline double to_double(const Int& x) { return x.template convert_to<double>(); }

// Canonical form "p/q" with q > 0 and gcd(p,q) = 1; integers print bare.
inline std::string to_string(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline std::string to_string(const Int& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline Rational parse_rational(const std::string& text) {
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string s = trim(text);
    require(!s.empty(), "ParseError", "empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        const Int num(trim(s.substr(0, slash)));
        const Int den(trim(s.substr(slash + 1)));
        require(den != 0, "ParseError", "zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        fail("ParseError", "bad rational literal '" + text + "'");
    }
}

inline std::vector<Rational> parse_rational_csv(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    require(!out.empty(), "ParseError", "empty coordinate list");
    return out;
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace cyvol
