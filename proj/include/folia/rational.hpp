#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace folia {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps the canonical form we rely on:
// gcd(num, den) = 1 and den > 0.
using Rational = boost::multiprecision::cpp_rational;

// Error taxonomy shared by the whole library. `input` maps to CLI exit
// code 2, `inadmissible` (resonance, degeneracy, vanishing symbol,
// irrational branch, non-Fuchsian pole) to exit code 3.
enum class ErrorKind { input, inadmissible };

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error input_error(const std::string& m) { return Error(ErrorKind::input, m); }
inline Error inadmissible_error(const std::string& m) { return Error(ErrorKind::inadmissible, m); }

/// Canonical rendering: "p" or "p/q".
inline std::string rat_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw input_error("rat_pow: zero base with negative exponent");
        return Rational(1) / rat_pow(base, -e);
    }
    Rational r(1), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Exact square root, if the argument is a perfect rational square.
inline std::optional<Rational> rat_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Int n = numerator(q), d = denominator(q);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace folia
