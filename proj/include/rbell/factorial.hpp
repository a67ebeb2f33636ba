#pragma once

#include "rbell/exact.hpp"
#include "rbell/polynomial.hpp"

namespace rbell {

/// Rising factorial (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1.
inline ExactRational pochhammer(const ExactRational& x, unsigned long n) {
    ExactRational out = 1;
    ExactRational factor = x;
    for (unsigned long i = 0; i < n; ++i) {
        out *= factor;
        factor += 1;
    }
    return out;
}

/// Falling factorial x(x-1)...(x-n+1), with value 1 at n = 0.
inline ExactRational falling_factorial(const ExactRational& x, unsigned long n) {
    ExactRational out = 1;
    ExactRational factor = x;
    for (unsigned long i = 0; i < n; ++i) {
        out *= factor;
        factor -= 1;
    }
    return out;
}

/// x(x-1)...(x-n+1) as an integer polynomial.
inline IntPolynomial falling_factorial_poly(unsigned long n) {
    IntPolynomial out = IntPolynomial::constant(1);
    for (unsigned long i = 0; i < n; ++i) out *= IntPolynomial{ExactInt(-static_cast<long>(i)), 1};
    return out;
}

/// x(x+1)...(x+n-1) as an integer polynomial.
inline IntPolynomial rising_factorial_poly(unsigned long n) {
    IntPolynomial out = IntPolynomial::constant(1);
    for (unsigned long i = 0; i < n; ++i) out *= IntPolynomial{ExactInt(static_cast<long>(i)), 1};
    return out;
}

}  // namespace rbell
