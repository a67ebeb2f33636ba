#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rbell/errors.hpp"
#include "rbell/exact.hpp"

namespace rbell {

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// Canonical form has no trailing zero coefficient; the zero polynomial has an
/// empty coefficient vector and degree -1.
template <typename Coeff>
class Polynomial {
public:
    using coeff_type = Coeff;

    Polynomial() = default;
    Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

    /// c·x^k
    static Polynomial monomial(Coeff c, std::size_t k) {
        std::vector<Coeff> v(k + 1);
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    static Polynomial x() { return monomial(Coeff(1), 1); }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    /// Coefficient of x^k; zero beyond the degree.
    Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }
    Coeff leading() const { return coeffs_.empty() ? Coeff(0) : coeffs_.back(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    Polynomial& operator*=(const Coeff& c) {
        for (auto& a : coeffs_) a *= c;
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
    friend Polynomial operator*(const Coeff& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Coeff> out(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Coeff(static_cast<unsigned long>(k));
        return Polynomial(std::move(out));
    }

    /// Multiplication by x^k.
    Polynomial shifted_up(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Coeff> out(k, Coeff(0));
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(out));
    }

    /// Exact division by x. A nonzero constant term means the caller's
    /// identity did not hold.
    Polynomial divide_by_x() const {
        if (is_zero()) return {};
        if (coeffs_[0] != 0) throw InconsistencyError("exact division by x: nonzero constant term");
        return Polynomial(std::vector<Coeff>(coeffs_.begin() + 1, coeffs_.end()));
    }

    /// Horner evaluation.
    template <typename Value>
    Value evaluate(const Value& x) const {
        Value acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Value(*it);
        return acc;
    }

    /// Composition p(q(x)).
    Polynomial compose(const Polynomial& q) const {
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
        return acc;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<ExactInt>;
using RationalPolynomial = Polynomial<ExactRational>;

inline RationalPolynomial to_rational(const IntPolynomial& p) {
    std::vector<ExactRational> c(p.coeffs().begin(), p.coeffs().end());
    return RationalPolynomial(std::move(c));
}

template <typename Coeff>
std::string to_string(const Polynomial<Coeff>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const Coeff& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        const Coeff mag = negative ? Coeff(-c) : c;
        const bool unit = (mag == 1);
        if (!unit || k == 0) out += rbell::to_string(mag);
        if (k >= 1) out += (unit ? "x" : "*x");
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

template <typename Coeff>
std::ostream& operator<<(std::ostream& os, const Polynomial<Coeff>& p) {
    return os << to_string(p);
}

/// Quotient and remainder over a field.
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                 const RationalPolynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<ExactRational> rem(a.coeffs());
    const long db = b.degree();
    if (a.degree() < db) return {RationalPolynomial{}, a};
    std::vector<ExactRational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const ExactRational& lead = b.leading();
    for (long k = a.degree(); k >= db; --k) {
        const ExactRational q = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - db)] = q;
        if (q == 0) continue;
        for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

/// Monic gcd over the rationals.
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * ExactRational(1 / a.leading());
}

}  // namespace rbell
