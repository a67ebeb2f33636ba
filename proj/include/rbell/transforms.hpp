#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rbell/errors.hpp"
#include "rbell/exact.hpp"
#include "rbell/factorial.hpp"
#include "rbell/matrix.hpp"
#include "rbell/polynomial.hpp"
#include "rbell/rbell.hpp"
#include "rbell/stirling.hpp"

namespace rbell {

using IntSequence = std::vector<ExactInt>;
using PolySequence = std::vector<IntPolynomial>;

/// b_n = Σ_k C(n, k) (-1)^{n-k} a_k
template <typename T>
std::vector<T> binomial_transform(const std::vector<T>& a) {
    std::vector<T> b(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        T acc{};
        for (std::size_t k = 0; k <= n; ++k) {
            T term = a[k] * binomial(n, k);
            if ((n - k) % 2 == 0) acc += term;
            else acc -= term;
        }
        b[n] = std::move(acc);
    }
    return b;
}

/// a_n = Σ_k C(n, k) b_k
template <typename T>
std::vector<T> inverse_binomial_transform(const std::vector<T>& b) {
    std::vector<T> a(b.size());
    for (std::size_t n = 0; n < b.size(); ++n) {
        T acc{};
        for (std::size_t k = 0; k <= n; ++k) acc += b[k] * binomial(n, k);
        a[n] = std::move(acc);
    }
    return a;
}

/// det(seq[i + j + offset]) for 0 <= i, j < size.
template <typename T>
T hankel_det(const std::vector<T>& seq, std::size_t size, std::size_t offset = 0) {
    if (size == 0) throw DomainError("hankel_det: size must be positive");
    const std::size_t needed = 2 * (size - 1) + offset + 1;
    if (seq.size() < needed)
        throw DomainError("hankel_det: need " + std::to_string(needed) + " terms, have " +
                          std::to_string(seq.size()));
    Matrix<T> h(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) h(i, j) = seq[i + j + offset];
    return fraction_free_det(std::move(h));
}

inline IntSequence rbell_sequence(unsigned long length, unsigned long r) {
    IntSequence s(length);
    for (unsigned long n = 0; n < length; ++n) s[n] = rbell_number(n, r);
    return s;
}

inline PolySequence rbell_poly_sequence(unsigned long length, unsigned long r) {
    PolySequence s(length);
    for (unsigned long n = 0; n < length; ++n) s[n] = rbell_poly(n, r).poly;
    return s;
}

/// Term n is the (n+1)x(n+1) Hankel determinant of (B_{m,r})_m.
inline IntSequence hankel_transform_rbell(unsigned long r, unsigned long n_max) {
    const IntSequence seq = rbell_sequence(2 * n_max + 1, r);
    IntSequence out(n_max + 1);
    for (unsigned long n = 0; n <= n_max; ++n) out[n] = hankel_det(seq, n + 1);
    return out;
}

/// ∏_{i=0}^n i!
inline ExactInt superfactorial(unsigned long n) {
    ExactInt out = 1;
    for (unsigned long i = 0; i <= n; ++i) out *= factorial(i);
    return out;
}

/// seq[n-1]·seq[n+1] >= seq[n]^2 at every interior n.
inline bool log_convexity_check(const IntSequence& seq) {
    if (seq.size() < 3) throw DomainError("log_convexity_check: need at least 3 terms");
    for (std::size_t n = 1; n + 1 < seq.size(); ++n)
        if (seq[n - 1] * seq[n + 1] < seq[n] * seq[n]) return false;
    return true;
}

struct CiglerPair {
    IntPolynomial computed;
    IntPolynomial expected;
};

/// d(n, k) = det(B_{i+j+k,r}(x))_{i,j<n} against its closed form, k in {0, 1}:
///   d(n,0) = x^{C(n,2)} ∏_{i<n} i!
///   d(n,1) = x^{C(n,2)} ∏_{i<n} i! · Σ_{i=0}^n C(n,i) x^i (r)_{n-i}
inline CiglerPair cigler_d(unsigned long n, unsigned long k, unsigned long r) {
    if (n == 0) throw DomainError("cigler_d: n must be positive");
    if (k > 1) throw DomainError("cigler_d: only k = 0 and k = 1 have closed forms");
    const PolySequence seq = rbell_poly_sequence(2 * (n - 1) + k + 1, r);
    CiglerPair out;
    out.computed = hankel_det(seq, n, k);

    const ExactInt prefactor = superfactorial(n - 1);
    IntPolynomial expected = IntPolynomial::monomial(prefactor, n * (n - 1) / 2);
    if (k == 1) {
        IntPolynomial sum;
        for (unsigned long i = 0; i <= n; ++i) {
            const ExactRational rising = pochhammer(ExactRational(r), n - i);
            sum += IntPolynomial::monomial(ExactInt(binomial(n, i) * rising.get_num()), i);
        }
        expected *= sum;
    }
    out.expected = std::move(expected);
    return out;
}

}  // namespace rbell
