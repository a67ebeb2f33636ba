#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rbell/errors.hpp"
#include "rbell/exact.hpp"

namespace rbell {

/// Power series truncated at a fixed order N: coefficients of z^0..z^N.
/// Arithmetic between two series requires equal order and never produces
/// terms beyond it.
class RationalSeries {
public:
    explicit RationalSeries(std::size_t order) : coeffs_(order + 1) {}
    RationalSeries(std::size_t order, std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    /// z truncated to the given order.
    static RationalSeries variable(std::size_t order) {
        RationalSeries s(order);
        if (order >= 1) s.coeffs_[1] = 1;
        return s;
    }

    /// e^{c z} - 1
    static RationalSeries exp_minus_one(std::size_t order, const ExactRational& c = 1) {
        RationalSeries s(order);
        ExactRational term = 1;
        for (std::size_t k = 1; k <= order; ++k) {
            term *= c;
            term /= static_cast<unsigned long>(k);
            s.coeffs_[k] = term;
        }
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<ExactRational>& coeffs() const { return coeffs_; }
    const ExactRational& operator[](std::size_t k) const { return coeffs_.at(k); }
    ExactRational& operator[](std::size_t k) { return coeffs_.at(k); }

    RationalSeries& operator+=(const RationalSeries& o) {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    RationalSeries& operator-=(const RationalSeries& o) {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    RationalSeries& operator*=(const ExactRational& c) {
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
    friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
    friend RationalSeries operator-(RationalSeries a) { return a *= ExactRational(-1); }
    friend RationalSeries operator*(RationalSeries a, const ExactRational& c) { return a *= c; }
    friend RationalSeries operator*(const ExactRational& c, RationalSeries a) { return a *= c; }

    /// Cauchy product truncated at the common order.
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
        a.check_order(b);
        const std::size_t n = a.order();
        RationalSeries out(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    friend bool operator==(const RationalSeries& a, const RationalSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    void check_order(const RationalSeries& o) const {
        if (o.coeffs_.size() != coeffs_.size()) throw DomainError("series order mismatch");
    }

    std::vector<ExactRational> coeffs_;
};

/// exp(f) for f with zero constant term, from g' = f'·g:
/// k·g_k = Σ_{j=1}^{k} j·f_j·g_{k-j}.
inline RationalSeries series_exp(const RationalSeries& f) {
    if (f[0] != 0) throw DomainError("series_exp: constant term must be zero");
    const std::size_t n = f.order();
    RationalSeries g(n);
    g[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        ExactRational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (f[j] == 0) continue;
            acc += static_cast<unsigned long>(j) * f[j] * g[k - j];
        }
        acc /= static_cast<unsigned long>(k);
        g[k] = acc;
    }
    return g;
}

}  // namespace rbell
