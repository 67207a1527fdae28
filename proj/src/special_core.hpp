/*
 * (C) Copyright 2026 tilh developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef TILH_SPECIAL_CORE_HPP
#define TILH_SPECIAL_CORE_HPP

namespace tilh::sf {

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); 1 when k = 0.
double pochhammer(double a, long k);

/// Lower incomplete gamma integral of t^{s-1} e^{-t} over [0, x].
/// Requires s > 0 and x >= 0; strictly increasing in x and tends to
/// tgamma(s) as x grows.  Relative accuracy better than 1e-13 on the
/// library's working range (s <= 30 or so).
double lower_incomplete_gamma(double s, double x);

/// Regularized P(s,x) = lower_incomplete_gamma(s,x) / tgamma(s), computed
/// without forming the unnormalized value (stays finite for large s).
double regularized_gamma_p(double s, double x);

/// Modified Bessel function I_n(x) of real order n >= 0 by the ascending
/// power series, terms added until the relative term drops below 1e-17.
/// Accuracy validated for x <= 40; throws ConvergenceError if the 500-term
/// cap is hit (x of several hundred and beyond).
double bessel_i_series(double n, double x);

/// I_n(x) / (x/2)^n -- the series with the leading power removed.  Total on
/// n >= 0, x >= 0 (equals 1/tgamma(n+1) at x = 0), which is what the
/// quadrature oracles evaluate so that integrands with m < n never touch a
/// negative power of the abscissa.
double bessel_i_series_scaled(double n, double x);

/// I_n(x) for half-odd n (n + 1/2 a natural number) by the finite
/// exponential form (Gradshteyn & Ryzhik 8.467).  Exact, but evaluated in
/// extended precision internally: the terms cancel heavily for small x.
double bessel_i_half_odd(double n, double x);

/// Generalized Marcum Q-function Q_nu(a,b), nu > 0, a >= 0, b >= 0, by the
/// canonical Poisson mixture of regularized upper gamma tails.  Absolute
/// accuracy around 1e-14; Q_nu(a,0) = 1 exactly.
double marcum_q(double nu, double a, double b);

} // namespace tilh::sf

#endif
