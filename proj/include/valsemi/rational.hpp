#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "valsemi/errors.hpp"

namespace valsemi {

// Arbitrary precision throughout. q_i products and series exponents outgrow
// machine words quickly enough that fixed-width types are not an option.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string format_int(const Int& n) { return n.str(); }

/// Canonical rational encoding: "p/q" reduced with q >= 2, plain "n" for integers.
inline std::string format_rat(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Strict decimal integer: optional '-', then digits. No floats, no whitespace.
inline Int parse_int(std::string_view text) {
    if (text.empty()) throw parse_error("empty integer literal");
    std::size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size())
        throw parse_error("bad integer literal '" + std::string(text) + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw parse_error("bad integer literal '" + std::string(text) + "'");
    }
    return Int(std::string(text));
}

/// "p/q" or "n"; the denominator part must be a positive integer.
inline Rat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    std::string_view den_part = text.substr(slash + 1);
    if (den_part.empty() || den_part[0] == '-')
        throw parse_error("bad rational literal '" + std::string(text) + "'");
    Int den = parse_int(den_part);
    if (den == 0)
        throw parse_error("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
}

}  // namespace valsemi
