#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ballotope {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact parser for rationals: "p/q", plain integers, or finite decimals
/// ("1.78" -> 89/50). Anything else throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view s = text.substr(b, e - b);
    if (s.empty()) return fail();

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = (s.front() == '-');
        s.remove_prefix(1);
        if (s.empty()) return fail();
    }

    auto digits = [&](std::string_view d) -> BigInt {
        BigInt v = 0;
        for (char c : d) {
            if (c < '0' || c > '9') fail();
            v = v * 10 + (c - '0');
        }
        return v;
    };

    Rational r;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) return fail();
        BigInt q = digits(den);
        if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        r = Rational(digits(num), q);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) return fail();
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        r = Rational(digits(whole) * scale + digits(frac), scale);
    } else {
        r = Rational(digits(s));
    }
    return negative ? -r : r;
}

/// Canonical "p/q" rendering (denominator always printed, so output
/// round-trips through parse_rational and never looks like a decimal).
inline std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace ballotope
