/*
 * (C) Copyright 2026 tilh developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "special_core.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "types.hpp"
#include "wide_real.hpp"

namespace tilh::sf {

namespace {

constexpr int kGammaIterMax = 500;
constexpr int kBesselTermCap = 500;
constexpr long kMarcumTermCap = 10000;

// Ascending-series sum for the lower incomplete gamma, x < s + 1:
// gamma(s,x) = x^s e^{-x} sum_j x^j / (s (s+1) ... (s+j)).
// Returns the bare sum; the caller applies the x^s e^{-x} scale.
double lower_gamma_series_sum(double s, double x) {
    double ap = s;
    double del = 1.0 / s;
    double sum = del;
    for (int i = 0; i < kGammaIterMax; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * std::numeric_limits<double>::epsilon()) return sum;
    }
    return sum; // x < s+1 always converges well before the cap
}

// Lentz continued fraction for the upper tail, x >= s + 1:
// Gamma(s,x) = x^s e^{-x} * cf.
double upper_gamma_cf(double s, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kGammaIterMax; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < std::numeric_limits<double>::epsilon()) break;
    }
    return h;
}

void check_gamma_domain(double s, double x) {
    detail::require(std::isfinite(s) && std::isfinite(x), "arguments must be finite");
    detail::require(s > 0.0, "s must be positive");
    detail::require(x >= 0.0, "x must be non-negative");
}

} // namespace

double pochhammer(double a, long k) {
    detail::require(std::isfinite(a), "a must be finite");
    detail::require(k >= 0, "k must be non-negative");
    double p = 1.0;
    for (long i = 0; i < k; ++i) p *= a + static_cast<double>(i);
    return p;
}

double lower_incomplete_gamma(double s, double x) {
    check_gamma_domain(s, x);
    if (x == 0.0) return 0.0;
    const double scale = std::exp(s * std::log(x) - x);
    if (x < s + 1.0) return scale * lower_gamma_series_sum(s, x);
    return std::tgamma(s) - scale * upper_gamma_cf(s, x);
}

double regularized_gamma_p(double s, double x) {
    check_gamma_domain(s, x);
    if (x == 0.0) return 0.0;
    const double lscale = s * std::log(x) - x - std::lgamma(s);
    if (x < s + 1.0) {
        // P = e^{lscale} * s * series_sum; folding s in keeps it normalized.
        return std::exp(lscale) * s * lower_gamma_series_sum(s, x);
    }
    const double q = std::exp(lscale) * upper_gamma_cf(s, x);
    return 1.0 - q;
}

double bessel_i_series(double n, double x) {
    detail::require(std::isfinite(n) && std::isfinite(x), "arguments must be finite");
    detail::require(n >= 0.0, "order must be non-negative");
    detail::require(x >= 0.0, "x must be non-negative");
    if (x == 0.0) return n == 0.0 ? 1.0 : 0.0;
    const double q = 0.25 * x * x;
    double term = std::exp(n * std::log(0.5 * x) - std::lgamma(n + 1.0));
    double sum = term;
    for (int k = 0; k < kBesselTermCap; ++k) {
        term *= q / ((k + 1.0) * (n + k + 1.0));
        sum += term;
        if (term < sum * 1e-17) return sum;
    }
    throw ConvergenceError("Bessel power series hit the 500-term cap", sum, kBesselTermCap);
}

double bessel_i_series_scaled(double n, double x) {
    detail::require(std::isfinite(n) && std::isfinite(x), "arguments must be finite");
    detail::require(n >= 0.0, "order must be non-negative");
    detail::require(x >= 0.0, "x must be non-negative");
    const double q = 0.25 * x * x;
    double term = 1.0 / std::tgamma(n + 1.0);
    double sum = term;
    for (int k = 0; k < kBesselTermCap; ++k) {
        term *= q / ((k + 1.0) * (n + k + 1.0));
        sum += term;
        if (term < sum * 1e-17) return sum;
    }
    throw ConvergenceError("Bessel power series hit the 500-term cap", sum, kBesselTermCap);
}

double bessel_i_half_odd(double n, double x) {
    detail::require(std::isfinite(n) && std::isfinite(x), "arguments must be finite");
    detail::require(is_half_odd(n), "half-odd evaluation requires n + 1/2 to be a natural number");
    detail::require(x >= 0.0, "x must be non-negative");
    if (x == 0.0) return 0.0; // series limit: leading power x^n with n >= 1/2

    // I_{N+1/2}(x) = (2 pi x)^{-1/2} sum_{k=0}^{N} (N+k)! / (2^k k! (N-k)!)
    //               x^{-k} [ (-1)^k e^x + (-1)^{N+1} e^{-x} ]
    // The x^{-k} terms cancel down to x^{N+1/2} as x -> 0, so everything is
    // carried in the wide type.
    const long N = std::lround(n - 0.5);
    using wide::real;
    const real wx = static_cast<real>(x);
    const real ep = wide::w_exp(wx);
    const real em = wide::w_exp(-wx);
    const int sign_tail = (N + 1) % 2 == 0 ? 1 : -1;
    real sum = 0;
    real xpow = 1; // x^{-k}
    for (long k = 0; k <= N; ++k) {
        const real coeff = wide::w_factorial(N + k) /
                           (wide::w_factorial(k) * wide::w_factorial(N - k));
        const real halfpow = static_cast<real>(1ULL << k); // 2^k, k <= N small
        const real bracket = (k % 2 == 0 ? ep : -ep) + static_cast<real>(sign_tail) * em;
        sum += coeff / halfpow * xpow * bracket;
        xpow /= wx;
    }
    const real pre = 1 / wide::w_sqrt(2 * wide::w_pi() * wx);
    return static_cast<double>(pre * sum);
}

double marcum_q(double nu, double a, double b) {
    detail::require(std::isfinite(nu) && std::isfinite(a) && std::isfinite(b),
                    "arguments must be finite");
    detail::require(nu > 0.0, "order must be positive");
    detail::require(a >= 0.0, "a must be non-negative");
    detail::require(b >= 0.0, "b must be non-negative");
    if (b == 0.0) return 1.0;

    // Q_nu(a,b) = sum_j e^{-a^2/2} (a^2/2)^j / j! * Q(nu + j, b^2/2)
    // with Q the regularized upper gamma.  Q(s+1,x) = Q(s,x) + x^s e^{-x} /
    // Gamma(s+1) lets each term follow from the previous one.  Since every
    // Q factor lies in [0,1], the truncated Poisson mass bounds the tail.
    const double x = 0.5 * a * a;
    const double y = 0.5 * b * b;
    constexpr double mass_tol = 1e-15;

    double q = 1.0 - regularized_gamma_p(nu, y);
    double d = std::exp(nu * std::log(y) - y - std::lgamma(nu + 1.0));
    double w = std::exp(-x);
    double mass = 0.0;
    double total = 0.0;
    for (long j = 0; j < kMarcumTermCap; ++j) {
        total += w * q;
        mass += w;
        if (1.0 - mass <= mass_tol) return total;
        w *= x / static_cast<double>(j + 1);
        q += d;
        d *= y / (nu + static_cast<double>(j) + 1.0);
    }
    throw ConvergenceError("Marcum Q series hit the term cap", total, kMarcumTermCap);
}

} // namespace tilh::sf
