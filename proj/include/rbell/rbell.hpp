#pragma once

#include <cstddef>
#include <vector>

#include "rbell/errors.hpp"
#include "rbell/exact.hpp"
#include "rbell/polynomial.hpp"
#include "rbell/stirling.hpp"

namespace rbell {

/// B_{n,r}(x) = Σ_k {n+r, k+r}_r x^k: monic of degree n with constant term r^n.
struct RBellPoly {
    unsigned long n = 0;
    unsigned long r = 0;
    IntPolynomial poly;
};

/// Coefficients straight from the r-Stirling triangle.
inline RBellPoly rbell_poly(unsigned long n, unsigned long r) {
    std::vector<ExactInt> c(n + 1);
    for (unsigned long k = 0; k <= n; ++k) c[k] = stirling2r(n + r, k + r, r);
    return {n, r, IntPolynomial(std::move(c))};
}

/// Derivative recurrence B_{n,r} = x(B'_{n-1,r} + B_{n-1,r}) + r·B_{n-1,r} from B_{0,r} = 1.
/// Independent of the Stirling cache.
inline RBellPoly rbell_poly_rec(unsigned long n, unsigned long r) {
    IntPolynomial p = IntPolynomial::constant(1);
    const ExactInt rr(r);
    for (unsigned long i = 0; i < n; ++i) p = (p.derivative() + p).shifted_up(1) + p * rr;
    return {n, r, std::move(p)};
}

inline ExactInt rbell_number(unsigned long n, unsigned long r) {
    const RBellPoly b = rbell_poly(n, r);
    ExactInt sum = 0;
    for (const auto& c : b.poly.coeffs()) sum += c;
    return sum;
}

/// Ordinary Bell polynomial B_n(x).
inline IntPolynomial bell_poly(unsigned long n) { return rbell_poly(n, 0).poly; }

/// B_{n,r}(x) = Σ_k r^k C(n, k) B_{n-k}(x).
inline IntPolynomial rbell_from_bell(unsigned long n, unsigned long r) {
    IntPolynomial out;
    for (unsigned long k = 0; k <= n; ++k)
        out += bell_poly(n - k) * ExactInt(pow_int(ExactInt(r), k) * binomial(n, k));
    return out;
}

/// Σ_{j=0}^m {m+r, j+r}_r · B_{n,r+j}; equals B_{n+m,r}.
inline ExactInt carlitz_compose(unsigned long n, unsigned long m, unsigned long r) {
    ExactInt sum = 0;
    for (unsigned long j = 0; j <= m; ++j) sum += stirling2r(m + r, j + r, r) * rbell_number(n, r + j);
    return sum;
}

/// Σ_{j=0}^m (-1)^{m-j} [m+r, j+r]_r · B_{n+j,r}; equals B_{n,r+m}.
inline ExactInt carlitz_inverse(unsigned long n, unsigned long m, unsigned long r) {
    ExactInt sum = 0;
    for (unsigned long j = 0; j <= m; ++j) {
        ExactInt term = stirling1r(m + r, j + r, r) * rbell_number(n + j, r);
        if ((m - j) % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum;
}

/// The compose sum applied to an arbitrary column: column[j] plays B_{n,r+j}.
inline ExactInt carlitz_compose_from(const std::vector<ExactInt>& column, unsigned long r) {
    if (column.empty()) throw DomainError("carlitz_compose_from: empty column");
    const unsigned long m = column.size() - 1;
    ExactInt sum = 0;
    for (unsigned long j = 0; j <= m; ++j) sum += stirling2r(m + r, j + r, r) * column[j];
    return sum;
}

/// The inverse sum applied to an arbitrary row: row[j] plays B_{n+j,r}.
inline ExactInt carlitz_inverse_from(const std::vector<ExactInt>& row, unsigned long r) {
    if (row.empty()) throw DomainError("carlitz_inverse_from: empty row");
    const unsigned long m = row.size() - 1;
    ExactInt sum = 0;
    for (unsigned long j = 0; j <= m; ++j) {
        ExactInt term = stirling1r(m + r, j + r, r) * row[j];
        if ((m - j) % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum;
}

/// (B_{n+1,r-1}(x) - (r-1)·B_{n,r-1}(x)) / x; equals B_{n,r}(x).
inline IntPolynomial cross_r_step(unsigned long n, unsigned long r) {
    if (r == 0) throw DomainError("cross_r_step requires r >= 1");
    const IntPolynomial diff = rbell_poly(n + 1, r - 1).poly - rbell_poly(n, r - 1).poly * ExactInt(r - 1);
    return diff.divide_by_x();
}

/// B_{n,r-1}(x) - (r-1)·B_{n-1,r-1}(x), the cross-r recurrence as it is
/// usually misprinted. Does not equal B_{n,r}(x); kept to document the erratum.
inline IntPolynomial cross_r_step_printed(unsigned long n, unsigned long r) {
    if (r == 0 || n == 0) throw DomainError("cross_r_step_printed requires n >= 1 and r >= 1");
    return rbell_poly(n, r - 1).poly - rbell_poly(n - 1, r - 1).poly * ExactInt(r - 1);
}

/// r·B_{n,r} + B_{n,r+1}; equals B_{n+1,r}.
inline ExactInt whitehead_step(unsigned long n, unsigned long r) {
    return ExactInt(r) * rbell_number(n, r) + rbell_number(n, r + 1);
}

/// Σ_{i=1}^n B_{i,n-i}.
inline ExactInt whitehead_row_sum(unsigned long n) {
    if (n == 0) throw DomainError("whitehead_row_sum requires n >= 1");
    ExactInt sum = 0;
    for (unsigned long i = 1; i <= n; ++i) sum += rbell_number(i, n - i);
    return sum;
}

/// table[r][n] = B_{n,r}.
inline std::vector<std::vector<ExactInt>> rbell_table(unsigned long n_max, unsigned long r_max) {
    std::vector<std::vector<ExactInt>> out(r_max + 1, std::vector<ExactInt>(n_max + 1));
    for (unsigned long r = 0; r <= r_max; ++r)
        for (unsigned long n = 0; n <= n_max; ++n) out[r][n] = rbell_number(n, r);
    return out;
}

}  // namespace rbell
