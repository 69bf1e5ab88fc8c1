#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace growthlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exit-code relevant failure classes shared by every module.

/// Malformed input text (expression, graph, relation, b-file, grid).
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured search or enumeration budget was exhausted.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "p/q" or a terminating decimal such as "0.6" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw input_error("not a rational number: '" + text + "'"); };
    if (text.empty()) fail();
    auto digits_only = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (auto slash = text.find('/'); slash != std::string::npos) {
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!digits_only(num, true) || !digits_only(den, false)) fail();
        BigInt d(den);
        if (d == 0) fail();
        return Rational(BigInt(num), d);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!digits_only(whole, true) || !digits_only(frac, false)) fail();
        bool negative = whole[0] == '-';
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt w(negative ? whole.substr(1) : whole);
        Rational r(w * scale + BigInt(frac), scale);
        return negative ? -r : r;
    }
    if (!digits_only(text, true)) fail();
    return Rational(BigInt(text));
}

} // namespace growthlab
