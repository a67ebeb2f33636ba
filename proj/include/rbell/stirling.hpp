#pragma once

// r-Stirling numbers in the unshifted convention: {n, k}_r counts partitions
// of {1..n} into k blocks with 1..r in distinct blocks, [n, k]_r counts
// permutations of {1..n} with k cycles and 1..r in distinct cycles.
//
//   unshifted          shifted (B_{n,r} convention)
//   {n, k}_r           {n + r, k + r}_r  -> stirling2r(n + r, k + r, r)
//                                        -> stirling2r_explicit(n, k, r)

#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "rbell/errors.hpp"
#include "rbell/exact.hpp"
#include "rbell/factorial.hpp"
#include "rbell/polynomial.hpp"

namespace rbell {

inline ExactInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    ExactInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

namespace detail {

/// Triangles grown row by row for each r, guarded by a mutex. Lookups hand
/// back copies, so callers never observe the cache.
class StirlingTriangles {
public:
    enum class Kind { second, first };

    explicit StirlingTriangles(Kind kind) : kind_(kind) {}

    ExactInt get(unsigned long n, unsigned long k, unsigned long r) {
        if (n < r || k < r || k > n) return 0;
        std::lock_guard lock(mutex_);
        auto& rows = triangles_[r];
        if (rows.empty()) rows.push_back({ExactInt(1)});  // row n = r: only k = r
        while (rows.size() <= n - r) {
            const auto& prev = rows.back();
            const unsigned long row_n = r + rows.size();  // n of the row being built
            std::vector<ExactInt> next(prev.size() + 1);
            for (std::size_t i = 0; i < next.size(); ++i) {
                const unsigned long kk = r + i;
                ExactInt v = 0;
                if (i < prev.size()) v = prev[i] * (kind_ == Kind::second ? kk : row_n - 1);
                if (i >= 1) v += prev[i - 1];
                next[i] = std::move(v);
            }
            rows.push_back(std::move(next));
        }
        return rows[n - r][k - r];
    }

private:
    Kind kind_;
    std::mutex mutex_;
    std::map<unsigned long, std::vector<std::vector<ExactInt>>> triangles_;
};

inline StirlingTriangles& second_kind_cache() {
    static StirlingTriangles cache(StirlingTriangles::Kind::second);
    return cache;
}

inline StirlingTriangles& first_kind_cache() {
    static StirlingTriangles cache(StirlingTriangles::Kind::first);
    return cache;
}

}  // namespace detail

/// {n, k}_r; zero outside r <= k <= n.
inline ExactInt stirling2r(unsigned long n, unsigned long k, unsigned long r) {
    return detail::second_kind_cache().get(n, k, r);
}

/// Unsigned [n, k]_r; zero outside r <= k <= n.
inline ExactInt stirling1r(unsigned long n, unsigned long k, unsigned long r) {
    return detail::first_kind_cache().get(n, k, r);
}

/// {n + r, k + r}_r from the alternating sum
/// k!·{n+r, k+r}_r = Σ_j (-1)^{k-j} C(k, j) (j + r)^n.
/// Takes SHIFTED indices, unlike stirling2r.
inline ExactInt stirling2r_explicit(unsigned long n, unsigned long k, unsigned long r) {
    ExactInt sum = 0;
    for (unsigned long j = 0; j <= k; ++j) {
        ExactInt term = binomial(k, j) * pow_int(ExactInt(j + r), n);
        if ((k - j) % 2 == 0) sum += term;
        else sum -= term;
    }
    const ExactInt kf = factorial(k);
    if (!mpz_divisible_p(sum.get_mpz_t(), kf.get_mpz_t()))
        throw InconsistencyError("alternating r-Stirling sum not divisible by k!");
    ExactInt out;
    mpz_divexact(out.get_mpz_t(), sum.get_mpz_t(), kf.get_mpz_t());
    return out;
}

/// (x + r)^n - Σ_k {n+r, k+r}_r x(x-1)...(x-k+1); the zero polynomial when
/// the horizontal generating function holds.
inline IntPolynomial horizontal_check(unsigned long n, unsigned long r) {
    IntPolynomial lhs = IntPolynomial::constant(1);
    const IntPolynomial linear{ExactInt(r), ExactInt(1)};
    for (unsigned long i = 0; i < n; ++i) lhs *= linear;
    IntPolynomial rhs;
    for (unsigned long k = 0; k <= n; ++k) rhs += falling_factorial_poly(k) * stirling2r(n + r, k + r, r);
    return lhs - rhs;
}

}  // namespace rbell
