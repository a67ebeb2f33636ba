#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rbell/errors.hpp"
#include "rbell/exact.hpp"
#include "rbell/polynomial.hpp"

namespace rbell {

/// Interval endpoint: a rational or one of the two infinities.
class Endpoint {
public:
    static Endpoint neg_inf() { return Endpoint(-1); }
    static Endpoint pos_inf() { return Endpoint(1); }
    static Endpoint at(ExactRational q) {
        Endpoint e(0);
        e.value_ = std::move(q);
        return e;
    }

    bool is_finite() const { return infinity_ == 0; }
    int infinity() const { return infinity_; }
    const ExactRational& value() const { return value_; }

private:
    explicit Endpoint(int inf) : infinity_(inf) {}
    int infinity_;
    ExactRational value_;
};

/// p / gcd(p, p'), made monic. Every root of p is a simple root of the result.
inline RationalPolynomial square_free_part(const RationalPolynomial& p) {
    if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
    RationalPolynomial g = gcd(p, p.derivative());
    RationalPolynomial q = divmod(p, g).first;
    return q * ExactRational(1 / q.leading());
}

/// Sturm chain p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i).
inline std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
    std::vector<RationalPolynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        RationalPolynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

namespace detail {

inline int sign_at(const RationalPolynomial& p, const Endpoint& e) {
    if (e.is_finite()) return sgn(p.evaluate(e.value()));
    const int lead = sgn(p.leading());
    if (e.infinity() > 0 || p.degree() % 2 == 0) return lead;
    return -lead;
}

inline std::size_t sign_variations(const std::vector<RationalPolynomial>& chain, const Endpoint& e) {
    std::size_t count = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = sign_at(q, e);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace detail

/// Number of distinct real roots of p in the half-open interval (lo, hi].
inline std::size_t sturm_root_count(const RationalPolynomial& p, const Endpoint& lo, const Endpoint& hi) {
    if (p.is_zero()) throw DomainError("sturm_root_count: zero polynomial");
    if (lo.infinity() > 0 || hi.infinity() < 0) throw DomainError("sturm_root_count: empty interval");
    if (lo.is_finite() && hi.is_finite() && !(lo.value() < hi.value()))
        throw DomainError("sturm_root_count: lo must be below hi");
    const RationalPolynomial q = square_free_part(p);
    if (q.degree() == 0) return 0;
    const auto chain = sturm_chain(q);
    // For square-free q, V(lo) - V(hi) counts roots in (lo, hi] even when an
    // endpoint is itself a root.
    return detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
}

inline std::size_t sturm_root_count(const IntPolynomial& p, const Endpoint& lo, const Endpoint& hi) {
    return sturm_root_count(to_rational(p), lo, hi);
}

}  // namespace rbell
