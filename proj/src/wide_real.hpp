/*
 * (C) Copyright 2026 tilh developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Extended-precision scalar used internally by the finite closed-form sums
// and the half-odd Bessel form.  Those expressions are exact but badly
// conditioned in places (terms of order one cancelling down to 1e-9 and
// below), so they are accumulated in __float128 where the toolchain
// provides it and in long double otherwise.  Nothing here is part of the
// public surface; results are rounded to double on return.

#ifndef TILH_WIDE_REAL_HPP
#define TILH_WIDE_REAL_HPP

#include <cmath>

#if defined(__SIZEOF_FLOAT128__) && __has_include(<quadmath.h>)
#define TILH_WIDE_IS_FLOAT128 1
#include <quadmath.h>
#else
#define TILH_WIDE_IS_FLOAT128 0
#endif

namespace tilh::wide {

#if TILH_WIDE_IS_FLOAT128

using real = __float128;

inline real w_exp(real x) { return expq(x); }
inline real w_log(real x) { return logq(x); }
inline real w_sqrt(real x) { return sqrtq(x); }
inline real w_pow(real x, real y) { return powq(x, y); }
inline real w_fabs(real x) { return fabsq(x); }
inline real w_tgamma(real x) { return tgammaq(x); }
inline constexpr real w_pi() { return M_PIq; }
inline constexpr real w_eps() { return FLT128_EPSILON; }

#else

using real = long double;

inline real w_exp(real x) { return std::exp(x); }
inline real w_log(real x) { return std::log(x); }
inline real w_sqrt(real x) { return std::sqrt(x); }
inline real w_pow(real x, real y) { return std::pow(x, y); }
inline real w_fabs(real x) { return std::fabs(x); }
inline real w_tgamma(real x) { return std::tgamma(x); }
inline constexpr real w_pi() { return 3.141592653589793238462643383279502884L; }
inline constexpr real w_eps() { return 1e-19L; }

#endif

/// Exact factorial of a small non-negative integer.
inline real w_factorial(long k) {
    real f = 1;
    for (long i = 2; i <= k; ++i) f *= static_cast<real>(i);
    return f;
}

/// Lower incomplete gamma integral of t^{s-1} e^{-t} over [0,x], s > 0,
/// x >= 0, by the classic split: ascending series below x = s+1, continued
/// fraction for the upper tail above it (Numerical Recipes 6.2 scheme).
inline real w_lower_gamma(real s, real x) {
    if (x <= 0) return 0;
    const real scale = w_exp(s * w_log(x) - x);
    if (x < s + 1) {
        // gamma(s,x) = x^s e^{-x} sum_j x^j / (s (s+1) ... (s+j))
        real ap = s;
        real del = real(1) / s;
        real sum = del;
        for (int i = 0; i < 500; ++i) {
            ap += 1;
            del *= x / ap;
            sum += del;
            if (w_fabs(del) < w_fabs(sum) * w_eps()) break;
        }
        return scale * sum;
    }
    // Upper tail Gamma(s,x) by the Lentz continued fraction, then complement.
    const real tiny = real(1e-300L);
    real b = x + 1 - s;
    real c = 1 / tiny;
    real d = 1 / b;
    real h = d;
    for (int i = 1; i <= 1000; ++i) {
        const real an = -static_cast<real>(i) * (static_cast<real>(i) - s);
        b += 2;
        d = an * d + b;
        if (w_fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (w_fabs(c) < tiny) c = tiny;
        d = 1 / d;
        const real delta = d * c;
        h *= delta;
        if (w_fabs(delta - 1) < w_eps()) break;
    }
    return w_tgamma(s) - scale * h;
}

} // namespace tilh::wide

#endif
