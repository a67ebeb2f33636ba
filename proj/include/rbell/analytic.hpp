#pragma once

// Numeric-side identities: Dobinski series, generating-function coefficients,
// confluent hypergeometric sums, the Cesàro-type integral, real-rootedness and
// the maximizing-index bound.
//
// Series with rational terms are summed exactly and converted to double once;
// a geometric tail bound and the conversion error make up ApproxReal::err.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "rbell/errors.hpp"
#include "rbell/exact.hpp"
#include "rbell/factorial.hpp"
#include "rbell/polynomial.hpp"
#include "rbell/rbell.hpp"
#include "rbell/series.hpp"
#include "rbell/stirling.hpp"
#include "rbell/sturm.hpp"

namespace rbell {

namespace detail {

inline ExactRational abs_q(const ExactRational& q) { return q < 0 ? ExactRational(-q) : q; }

/// max(1, |q|) as a rational.
inline ExactRational scale_floor_one(const ExactRational& q) {
    ExactRational a = abs_q(q);
    return a < 1 ? ExactRational(1) : a;
}

inline ExactRational tol_to_rational(double tol) { return ExactRational(tol); }

}  // namespace detail

/// e^x from its Taylor series, good to roughly 1e-18 relative.
inline ApproxReal exp_approx(const ExactRational& x) {
    // Terms t_k = x^k/k!. Once |x|/(k+1) <= 1/2 the remaining tail is at most
    // twice the next term in magnitude.
    ExactRational sum = 0;
    ExactRational term = 1;
    const ExactRational ax = detail::abs_q(x);
    const ExactRational tiny(1, ExactInt(1) << 62);
    for (unsigned long k = 0;; ++k) {
        sum += term;
        ExactRational next = term * x / (k + 1);
        const bool contracting = 2 * ax <= k + 2;
        if (contracting) {
            ExactRational tail = 2 * detail::abs_q(next);
            if (tail <= tiny * detail::abs_q(sum)) {
                const RoundedDouble d = to_double(sum);
                return {d.value, d.err + to_double(tail).value * (1 + 4 * kUnitRoundoff)};
            }
        }
        term = std::move(next);
        if (k > 100000) throw ConvergenceError("exp_approx: no convergence");
    }
}

/// Σ_k (k + r)^n x^k / k! without the e^{-x} factor.
///
/// Stops at the first K >= max(n + r, ceil(2ex)) where the term ratio
/// x/(K+1)·((K+1+r)/(K+r))^n is at most 1/2 and the tail bound 2·t_{K+1} is
/// below tol/16·max(1, S_K). The ratio decreases in K, so the bound holds for
/// the whole tail.
inline ApproxReal dobinski_sum(unsigned long n, unsigned long r, const ExactRational& x, double tol) {
    if (!(tol > 0)) throw DomainError("dobinski: tol must be positive");
    if (x <= 0) throw DomainError("dobinski: x must be positive");
    const double threshold_d = std::ceil(2 * std::numbers::e * x.get_d());
    const unsigned long min_k = std::max<unsigned long>(n + r, static_cast<unsigned long>(threshold_d));
    const ExactRational qtol = detail::tol_to_rational(tol);

    auto term_at = [&](unsigned long k) {
        ExactRational t = pow_rational(x, k) * pow_int(ExactInt(k + r), n);
        t /= factorial(k);
        return t;
    };

    ExactRational sum = 0;
    ExactRational term = term_at(0);
    for (unsigned long k = 0;; ++k) {
        sum += term;
        ExactRational next = term_at(k + 1);
        if (k >= min_k && k + r > 0) {
            ExactRational ratio = x / (k + 1) * pow_rational(ExactRational(k + 1 + r, k + r), n);
            ratio.canonicalize();
            const ExactRational tail = 2 * next;
            if (ratio <= ExactRational(1, 2) && 16 * tail <= qtol * detail::scale_floor_one(sum)) {
                const RoundedDouble d = to_double(sum);
                return {d.value, d.err + to_double(tail).value * (1 + 4 * kUnitRoundoff)};
            }
        }
        term = std::move(next);
        if (k > 1000000) throw ConvergenceError("dobinski: no convergence");
    }
}

/// B_{n,r}(x) = e^{-x} Σ_k (k + r)^n x^k / k!, with err <= tol·max(1, |value|).
inline ApproxReal dobinski_eval(unsigned long n, unsigned long r, const ExactRational& x, double tol) {
    const ApproxReal weighted = exp_approx(-x) * dobinski_sum(n, r, x, tol);
    if (weighted.err > tol * std::max(1.0, std::abs(weighted.value)))
        throw ConvergenceError("dobinski: error bound exceeds tolerance");
    return weighted;
}

/// Taylor coefficients of e^{x(e^z - 1) + rz} through z^{n_max}.
inline std::vector<ExactRational> egf_coeffs(unsigned long n_max, unsigned long r, const ExactRational& x) {
    RationalSeries exponent = RationalSeries::exp_minus_one(n_max) * x;
    exponent += RationalSeries::variable(n_max) * ExactRational(r);
    return series_exp(exponent).coeffs();
}

struct RationalPair {
    ExactRational lhs;
    ExactRational rhs;
};

/// Column generating function of {n+r, m+r}_r at a point z, in product form
/// z^m / ∏_{j=r}^{m+r} (1 - jz) and in Pochhammer form
/// (-1/(rz - 1))·(-1)^m / ((rz + z - 1)/z)_m.
inline RationalPair ogf_coefficient_pair(unsigned long m, unsigned long r, const ExactRational& z) {
    if (z == 0) throw DomainError("ogf_coefficient_pair: z must be nonzero");
    ExactRational denom = 1;
    for (unsigned long j = r; j <= m + r; ++j) {
        ExactRational factor = 1 - ExactRational(j) * z;
        if (factor == 0) throw DomainError("ogf_coefficient_pair: z is a pole");
        denom *= factor;
    }
    RationalPair out;
    out.lhs = pow_rational(z, m) / denom;

    const ExactRational rz1 = ExactRational(r) * z - 1;
    const ExactRational shifted = (ExactRational(r) * z + z - 1) / z;
    const ExactRational poch = pochhammer(shifted, m);
    if (poch == 0 || rz1 == 0) throw DomainError("ogf_coefficient_pair: z is a pole");
    out.rhs = ExactRational(-1) / rz1 * ExactRational(m % 2 == 0 ? 1 : -1) / poch;
    return out;
}

/// z^m / ∏_{j=r}^{m+r} (1 - jz) as a truncated power series in z.
inline RationalSeries ogf_column_series(unsigned long m, unsigned long r, std::size_t order) {
    RationalSeries out(order);
    if (m <= order) out[m] = 1;
    for (unsigned long j = r; j <= m + r; ++j) {
        // multiply by 1/(1 - jz) = Σ j^i z^i
        for (std::size_t k = 1; k <= order; ++k) out[k] += ExactRational(j) * out[k - 1];
    }
    return out;
}

/// ₁F₁(a; b; x) = Σ_k (a)_k/(b)_k x^k/k!, err <= tol·max(1, |value|).
///
/// For k > |b| the ratio bound (|a| + k)|x| / ((k - |b|)(k + 1)) dominates
/// every later term ratio; once it is at most 1/2 the tail is at most twice
/// the next term.
inline ApproxReal hypergeom_1f1(const ExactRational& a, const ExactRational& b, const ExactRational& x,
                                double tol) {
    if (!(tol > 0)) throw DomainError("hypergeom_1f1: tol must be positive");
    if (b <= 0 && b.get_den() == 1) throw DomainError("hypergeom_1f1: b is a nonpositive integer");
    if (x == 0) return {1.0, 0.0};
    const ExactRational qtol = detail::tol_to_rational(tol);
    const ExactRational abs_a = detail::abs_q(a);
    const ExactRational abs_b = detail::abs_q(b);
    const ExactRational abs_x = detail::abs_q(x);

    ExactRational sum = 0;
    ExactRational term = 1;
    for (unsigned long k = 0;; ++k) {
        sum += term;
        ExactRational next = term * (a + k) * x / ((b + k) * (k + 1));
        if (next == 0) {  // a is a nonpositive integer: the series terminates
            const RoundedDouble d = to_double(sum);
            return {d.value, d.err};
        }
        if (ExactRational(k) > abs_b) {
            const ExactRational bound = (abs_a + k) * abs_x / ((ExactRational(k) - abs_b) * (k + 1));
            const ExactRational tail = 2 * detail::abs_q(next);
            if (bound <= ExactRational(1, 2) && 8 * tail <= qtol * detail::scale_floor_one(sum)) {
                const RoundedDouble d = to_double(sum);
                return {d.value, d.err + to_double(tail).value * (1 + 4 * kUnitRoundoff)};
            }
        }
        term = std::move(next);
        if (k > 1000000) throw ConvergenceError("hypergeom_1f1: no convergence");
    }
}

/// |e^{-x}·₁F₁(a; b; x) - ₁F₁(b - a; b; -x)| with the combined error of both sides.
inline ApproxReal kummer_residual(const ExactRational& a, const ExactRational& b, const ExactRational& x,
                                  double tol) {
    if (!(tol > 0)) throw DomainError("kummer_residual: tol must be positive");
    if (b <= 0 && b.get_den() == 1) throw DomainError("kummer_residual: b is a nonpositive integer");
    if (x == 0) return {0.0, 0.0};
    const ApproxReal lhs = exp_approx(-x) * hypergeom_1f1(a, b, x, tol);
    const ApproxReal rhs = hypergeom_1f1(b - a, b, -x, tol);
    return abs(lhs - rhs);
}

struct QuadratureResult {
    ApproxReal value;
    /// Subintervals of the final composite Simpson grid (base grid times a power of 2).
    std::size_t nodes_used = 0;
};

inline constexpr std::size_t kSimpsonBaseGrid = 32;
inline constexpr std::size_t kSimpsonMaxNodes = std::size_t{1} << 20;

/// Composite Simpson on [lo, hi], doubling the grid until two successive
/// estimates differ by at most accept(estimate); err is that last difference.
inline QuadratureResult simpson_doubling(const std::function<double(double)>& f, double lo, double hi,
                                         const std::function<double(double)>& accept) {
    std::size_t intervals = kSimpsonBaseGrid;
    double h = (hi - lo) / static_cast<double>(intervals);
    const double ends = f(lo) + f(hi);
    double even = 0;  // interior nodes at even index
    double odd = 0;
    for (std::size_t i = 1; i < intervals; ++i) (i % 2 ? odd : even) += f(lo + static_cast<double>(i) * h);
    double previous = h / 3 * (ends + 4 * odd + 2 * even);
    int refinements = 0;
    while (intervals < kSimpsonMaxNodes) {
        intervals *= 2;
        h /= 2;
        even += odd;
        odd = 0;
        for (std::size_t i = 1; i < intervals; i += 2) odd += f(lo + static_cast<double>(i) * h);
        const double current = h / 3 * (ends + 4 * odd + 2 * even);
        const double diff = std::abs(current - previous);
        ++refinements;
        // Two refinements at least: coarse grids can alias sin(nθ) to zero.
        if (refinements >= 2 && diff <= accept(current)) return {ApproxReal(current, diff), intervals};
        previous = current;
    }
    throw ConvergenceError("simpson: node cap reached without convergence");
}

/// Im[exp(e^{e^{iθ}})·exp(r e^{iθ})]·sin(nθ) evaluated in complex arithmetic.
inline double cesaro_integrand_complex(double theta, unsigned long n, unsigned long r) {
    const std::complex<double> w = std::polar(1.0, theta);
    const std::complex<double> value = std::exp(std::exp(w)) * std::exp(static_cast<double>(r) * w);
    return value.imag() * std::sin(static_cast<double>(n) * theta);
}

/// The same integrand with the imaginary part expanded into real functions.
inline double cesaro_integrand_real(double theta, unsigned long n, unsigned long r) {
    const double rd = static_cast<double>(r);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double ec = std::exp(c);
    const double inner = ec * std::sin(s);
    const double magnitude = std::exp(ec * std::cos(s) + rd * c);
    return magnitude * (std::cos(inner) * std::sin(rd * s) + std::sin(inner) * std::cos(rd * s)) *
           std::sin(static_cast<double>(n) * theta);
}

inline constexpr double kIntegrandAgreement = 1e-12;

/// (2·n!/π)·Im ∫₀^π exp(e^{e^{iθ}}) exp(r e^{iθ}) sin(nθ) dθ, which equals
/// Σ_k (k + r)^n / k!. Grid doubling stops at relative change tol/2.
inline QuadratureResult cesaro_moment_sum(unsigned long n, unsigned long r, double tol) {
    if (!(tol > 0)) throw DomainError("cesaro_integral: tol must be positive");
    if (n == 0) throw DomainError("cesaro_integral: n must be positive");
    const double scale = 2 * factorial(n).get_d() / std::numbers::pi;
    auto integrand = [&](double theta) {
        const double complex_form = cesaro_integrand_complex(theta, n, r);
        const double real_form = cesaro_integrand_real(theta, n, r);
        // Agreement is relative to the modulus of the exponential factor.
        const double modulus =
            std::exp(std::exp(std::cos(theta)) * std::cos(std::sin(theta)) + static_cast<double>(r) * std::cos(theta));
        if (std::abs(complex_form - real_form) > kIntegrandAgreement * std::max(1.0, modulus))
            throw InconsistencyError("cesaro_integral: complex and real integrand forms disagree");
        return complex_form;
    };
    auto accept = [&](double estimate) { return tol / 2 * std::max(1.0 / scale, std::abs(estimate)); };
    QuadratureResult raw = simpson_doubling(integrand, 0.0, std::numbers::pi, accept);
    raw.value = ApproxReal(raw.value.value * scale, raw.value.err * scale);
    return raw;
}

/// B_{n,r} = (2·n!/(πe))·Im ∫₀^π exp(e^{e^{iθ}}) exp(r e^{iθ}) sin(nθ) dθ for n >= 1.
inline QuadratureResult cesaro_integral(unsigned long n, unsigned long r, double tol) {
    QuadratureResult out = cesaro_moment_sum(n, r, tol);
    out.value = out.value * exp_approx(ExactRational(-1));
    return out;
}

/// Im ∫₀^π exp(j e^{iθ}) sin(nθ) dθ; equals (π/2)·j^n/n!.
inline ApproxReal sin_moment(unsigned long j, unsigned long n, double tol) {
    if (!(tol > 0)) throw DomainError("sin_moment: tol must be positive");
    if (n == 0) throw DomainError("sin_moment: n must be positive");
    const double jd = static_cast<double>(j);
    auto integrand = [&](double theta) {
        return std::exp(jd * std::cos(theta)) * std::sin(jd * std::sin(theta)) * std::sin(static_cast<double>(n) * theta);
    };
    auto accept = [&](double) { return tol / 2; };
    return simpson_doubling(integrand, 0.0, std::numbers::pi, accept).value;
}

struct RootReport {
    unsigned long degree = 0;
    /// Distinct roots in (-∞, 0).
    unsigned long distinct_neg_roots = 0;
    bool root_at_zero = false;
    /// gcd(p, p') is constant.
    bool simple_roots = false;
};

inline RootReport real_rootedness_report(unsigned long n, unsigned long r) {
    if (n == 0) throw DomainError("real_rootedness_report: B_{0,r} is constant");
    const IntPolynomial p = rbell_poly(n, r).poly;
    const RationalPolynomial q = to_rational(p);
    RootReport out;
    out.degree = static_cast<unsigned long>(p.degree());
    out.root_at_zero = p.coeff(0) == 0;
    const std::size_t nonpositive = sturm_root_count(q, Endpoint::neg_inf(), Endpoint::at(0));
    out.distinct_neg_roots = static_cast<unsigned long>(nonpositive) - (out.root_at_zero ? 1 : 0);
    out.simple_roots = square_free_part(q).degree() == q.degree();
    return out;
}

struct MaxIndexReport {
    unsigned long n = 0;
    unsigned long r = 0;
    /// Every k in [r, n + r] where {n + r, k}_r is maximal; consecutive.
    std::vector<unsigned long> maximizers;
    /// B_{n+1,r}/B_{n,r} - (r + 1): the mean block count beyond the r anchors.
    ExactRational ratio_estimate;
    /// Some maximizer K has |(K - r) - ratio_estimate| < 1.
    bool bound_holds = false;
    /// Some maximizer K has |K - ratio_estimate| < 1 (K unshifted).
    bool unshifted_bound_holds = false;
};

inline MaxIndexReport max_index(unsigned long n, unsigned long r) {
    if (n == 0) throw DomainError("max_index: n must be positive");
    MaxIndexReport out;
    out.n = n;
    out.r = r;
    ExactInt best = -1;
    for (unsigned long k = r; k <= n + r; ++k) {
        const ExactInt v = stirling2r(n + r, k, r);
        if (v > best) {
            best = v;
            out.maximizers.assign(1, k);
        } else if (v == best) {
            out.maximizers.push_back(k);
        }
    }
    out.ratio_estimate = make_rational(rbell_number(n + 1, r), rbell_number(n, r)) - ExactRational(r + 1);
    for (unsigned long k : out.maximizers) {
        const ExactRational shifted_gap = detail::abs_q(ExactRational(k - r) - out.ratio_estimate);
        const ExactRational unshifted_gap = detail::abs_q(ExactRational(k) - out.ratio_estimate);
        if (shifted_gap < 1) out.bound_holds = true;
        if (unshifted_gap < 1) out.unshifted_bound_holds = true;
    }
    return out;
}

}  // namespace rbell
