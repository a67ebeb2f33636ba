#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "rbell/errors.hpp"

namespace rbell {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

inline ExactInt pow_int(const ExactInt& base, unsigned long exponent) {
    ExactInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

inline ExactRational pow_rational(const ExactRational& base, unsigned long exponent) {
    ExactRational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return out;  // already canonical: gcd(num, den) = 1 survives powers
}

inline ExactInt factorial(unsigned long n) {
    ExactInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "P/Q" or "P" with an optional sign on P.
inline ExactRational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part, bool allow_sign) {
        if (part.empty()) throw DomainError("malformed rational: '" + std::string(text) + "'");
        std::size_t start = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
        if (start == part.size()) throw DomainError("malformed rational: '" + std::string(text) + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw DomainError("malformed rational: '" + std::string(text) + "'");
        std::string digits(part[0] == '+' ? part.substr(1) : part);
        return ExactInt(digits, 10);
    };
    if (slash == std::string_view::npos) return ExactRational(parse_int(text, true));
    return make_rational(parse_int(text.substr(0, slash), true),
                         parse_int(text.substr(slash + 1), false));
}

inline std::string to_string(const ExactInt& v) { return v.get_str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const ExactRational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

/// Unit roundoff of IEEE double.
inline constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

/// Nearest double to q plus an absolute bound on the conversion error.
struct RoundedDouble {
    double value;
    double err;
};

inline RoundedDouble to_double(const ExactRational& q) {
    // mpq_get_d truncates; one ulp covers it.
    const double v = q.get_d();
    if (!std::isfinite(v)) throw DomainError("rational out of double range");
    return {v, std::abs(v) * 2 * kUnitRoundoff + std::numeric_limits<double>::denorm_min()};
}

/// Floating value with a guaranteed absolute error bound: the true value lies
/// in [value - err, value + err].
struct ApproxReal {
    double value = 0.0;
    double err = 0.0;

    ApproxReal() = default;
    ApproxReal(double v, double e) : value(v), err(e) {
        if (!(e >= 0.0) || !std::isfinite(e)) throw InconsistencyError("invalid error bound");
    }

    bool contains(double x) const { return std::abs(x - value) <= err; }

    /// Exact containment test against a rational.
    bool contains(const ExactRational& x) const {
        const RoundedDouble d = to_double(x);
        return std::abs(d.value - value) <= err + d.err;
    }
};

// Each arithmetic result widens the bound by the rounding of the result itself.
inline ApproxReal operator+(const ApproxReal& a, const ApproxReal& b) {
    const double v = a.value + b.value;
    return {v, (a.err + b.err + std::abs(v) * kUnitRoundoff) * (1 + 2 * kUnitRoundoff)};
}

inline ApproxReal operator-(const ApproxReal& a, const ApproxReal& b) {
    const double v = a.value - b.value;
    return {v, (a.err + b.err + std::abs(v) * kUnitRoundoff) * (1 + 2 * kUnitRoundoff)};
}

inline ApproxReal operator*(const ApproxReal& a, const ApproxReal& b) {
    const double v = a.value * b.value;
    const double e = std::abs(a.value) * b.err + std::abs(b.value) * a.err + a.err * b.err +
                     std::abs(v) * kUnitRoundoff;
    return {v, e * (1 + 4 * kUnitRoundoff)};
}

inline ApproxReal abs(const ApproxReal& a) { return {std::abs(a.value), a.err}; }

inline ApproxReal from_rational(const ExactRational& q) {
    const RoundedDouble d = to_double(q);
    return {d.value, d.err};
}

}  // namespace rbell
