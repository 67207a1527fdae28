/*
 * (C) Copyright 2026 tilh developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "toronto.hpp"

#include <cmath>

#include "errors.hpp"
#include "quadrature.hpp"
#include "special_core.hpp"
#include "wide_real.hpp"

namespace tilh::toronto {

namespace {

// The closed form exists when the Bessel kernel admits its finite
// exponential expansion (half-odd n) and every term of the resulting
// integrand carries a non-negative integer power of t.  The exponent of
// the k-th term is m - n - k - 1/2 with k up to n - 1/2, so the binding
// condition is m - 2n >= 0 on top of m - n - 1/2 being a non-negative
// integer (which forces m to be a positive integer).
bool finite_sum_indices(double m, double n, long &N, long &L0) {
    if (!is_half_odd(n)) return false;
    const double l0 = m - n - 0.5;
    if (!is_nonneg_integer(l0)) return false;
    N = std::lround(n - 0.5);
    L0 = std::lround(l0);
    return true;
}

// Signed Gaussian-power integral over [0,x]:
//   G_l(x) = int_0^x u^l e^{-u^2} du = gamma((l+1)/2, x^2) / 2  for x >= 0,
// extended to negative x by the parity of the integrand (odd l gives an
// even G_l, even l an odd one).  This is what the binomial split of
// int_0^B t^L e^{-(t -+ r)^2} dt produces; the reflection for x < 0 covers
// B < r.
wide::real g_power_gauss(long l, wide::real x) {
    const wide::real ax = x < 0 ? -x : x;
    wide::real g = wide::w_lower_gamma((static_cast<wide::real>(l) + 1) / 2, ax * ax) / 2;
    if (x < 0 && l % 2 == 0) g = -g;
    return g;
}

// The corrected finite double sum.  Derivation sketch: expand I_n(2rt) by
// the half-odd exponential form, complete the squares to e^{-(t-r)^2} and
// e^{-(t+r)^2}, substitute u = t -+ r and expand the (u +- r)^{L_k}
// binomials.  Per (k,l) the bracket is
//   (-1)^k G_l(B-r) + (-1)^{m-k-l} G_l(B+r) + (-1)^{k+l} (1-(-1)^m) G_l(r)
// which differs from the double sum usually printed in the literature
// (sign of the (B-r) block, the r-only block for odd m, and the parity
// reflection of G_l for B < r); see docs/RECONCILIATION.md.  Terms of
// order one can cancel down to 1e-9 and beyond on the working range, hence
// the wide accumulator.
double finite_sum(double m, double n, double r, double b, long N, long L0) {
    using wide::real;
    const long M = std::lround(m);
    const bool m_odd = (M % 2) != 0;

    const real wr = static_cast<real>(r);
    const real gb_minus_arg = static_cast<real>(b) - wr;
    const real gb_plus_arg = static_cast<real>(b) + wr;

    real total = 0;
    for (long k = 0; k <= N; ++k) {
        const long Lk = L0 - k;
        const real ck = wide::w_factorial(N + k) /
                        (wide::w_factorial(k) * wide::w_factorial(N - k) *
                         static_cast<real>(1ULL << (2 * k)) * wide::w_sqrt(wide::w_pi()));
        const int sk = k % 2 == 0 ? 1 : -1;
        real rpow = 1; // r^{-(2k+l)}, built incrementally over l
        for (long j = 0; j < 2 * k; ++j) rpow /= wr;
        for (long l = 0; l <= Lk; ++l) {
            const real w = ck * wide::w_factorial(Lk) /
                           (wide::w_factorial(l) * wide::w_factorial(Lk - l)) * rpow;
            const long e_plus = M - k - l;
            const int sp = ((e_plus % 2) + 2) % 2 == 0 ? 1 : -1;
            real bracket = static_cast<real>(sk) * g_power_gauss(l, gb_minus_arg) +
                           static_cast<real>(sp) * g_power_gauss(l, gb_plus_arg);
            if (m_odd) {
                const int sl = (k + l) % 2 == 0 ? 1 : -1;
                bracket += 2 * static_cast<real>(sl) * g_power_gauss(l, wr);
            }
            total += w * bracket;
            rpow /= wr;
        }
    }
    return static_cast<double>(total);
}

EvalResult from_quad(const QuadResult &q) {
    return EvalResult{q.value, Method::oracle, q.error_estimate, q.subdivisions_used};
}

} // namespace

bool closed_form_available(double m, double n) {
    long N = 0;
    long L0 = 0;
    if (!finite_sum_indices(m, n, N, L0)) return false;
    return L0 >= N;
}

EvalResult closed_form(const TorontoParams &p, const QuadSpec &spec) {
    p.validate();
    detail::require(is_half_odd(p.n), "closed form requires half-odd n (n + 1/2 a natural number)");
    long N = 0;
    long L0 = 0;
    detail::require(finite_sum_indices(p.m, p.n, N, L0) && L0 >= 0,
                    "closed form requires m - n - 1/2 to be a non-negative integer");
    if (p.b == 0.0) return EvalResult{0.0, Method::closed_form, 0.0, 0};
    if (L0 < N) {
        // Some term exponent m - n - k - 1/2 is negative: the expansion does
        // not apply and the defining integral is the value's source.
        return from_quad(quad::toronto_oracle(p, spec));
    }
    EvalResult res;
    res.value = finite_sum(p.m, p.n, p.r, p.b, N, L0);
    res.method = Method::closed_form;
    res.steps = (N + 1) * (L0 + 1);
    return res;
}

EvalResult series_3(const TorontoParams &p, const SeriesControl &ctl) {
    p.validate();
    detail::require(ctl.rel_tol > 0.0, "rel_tol must be positive");
    detail::require(ctl.max_terms >= 1, "max_terms must be at least 1");
    if (p.b == 0.0) return EvalResult{0.0, Method::series_3, 0.0, 0};

    // T_B = B^{2a} r^{2(n-a+1)} e^{-B^2-r^2} / Gamma(n+1)
    //       * sum_k B^{2k} Y_k / (a)_{k+1},
    // Y_k = sum_{i<=k} (a)_i r^{2i} / ((n+1)_i i!),  a = (m+1)/2.
    // All terms are positive.  (The outer variable is B^{2k}; the series is
    // often printed with r^{2k} there, which does not reproduce the
    // defining integral -- see docs/RECONCILIATION.md.)
    const double a = 0.5 * (p.m + 1.0);
    const double n = p.n;
    const double r2 = p.r * p.r;
    const double b2 = p.b * p.b;
    const double pref = std::exp(2.0 * a * std::log(p.b) + 2.0 * (n - a + 1.0) * std::log(p.r) -
                                 b2 - r2 - std::lgamma(n + 1.0));

    double y_inc = 1.0;  // (a)_k r^{2k} / ((n+1)_k k!)
    double y = 1.0;      // Y_k
    double poch = a;     // (a)_{k+1}
    double bpow = 1.0;   // B^{2k}
    double sum = 0.0;
    int quiet = 0;
    double last_rel = 0.0;
    for (long k = 0; k < ctl.max_terms; ++k) {
        const double term = bpow * y / poch;
        sum += term;
        last_rel = term / sum;
        quiet = last_rel < ctl.rel_tol ? quiet + 1 : 0;
        if (quiet >= 3)
            return EvalResult{pref * sum, Method::series_3, last_rel, k + 1};
        const double kk = static_cast<double>(k);
        y_inc *= (a + kk) * r2 / ((n + 1.0 + kk) * (kk + 1.0));
        y += y_inc;
        poch *= (a + kk + 1.0);
        bpow *= b2;
    }
    throw ConvergenceError("series (nested form) hit the term cap", pref * sum, ctl.max_terms);
}

EvalResult series_4(const TorontoParams &p, const SeriesControl &ctl, Series4GammaArg arg) {
    p.validate();
    detail::require(ctl.rel_tol > 0.0, "rel_tol must be positive");
    detail::require(ctl.max_terms >= 1, "max_terms must be at least 1");
    if (p.b == 0.0) return EvalResult{0.0, Method::series_4, 0.0, 0};

    // T_B = r^{2(n-a+1)} e^{-r^2} sum_k r^{2k} gamma(a+k, B^2) / (k! Gamma(n+k+1))
    const double a = 0.5 * (p.m + 1.0);
    const double n = p.n;
    const double r2 = p.r * p.r;
    const double garg = arg == Series4GammaArg::b_squared ? p.b * p.b : p.b;
    const double pref = std::exp(2.0 * (n - a + 1.0) * std::log(p.r) - r2);

    double q = std::exp(-std::lgamma(n + 1.0)); // r^{2k} / (k! Gamma(n+k+1))
    double sum = 0.0;
    int quiet = 0;
    double last_rel = 0.0;
    for (long k = 0; k < ctl.max_terms; ++k) {
        const double kk = static_cast<double>(k);
        const double term = q * sf::lower_incomplete_gamma(a + kk, garg);
        sum += term;
        last_rel = term / sum;
        quiet = last_rel < ctl.rel_tol ? quiet + 1 : 0;
        if (quiet >= 3)
            return EvalResult{pref * sum, Method::series_4, last_rel, k + 1};
        q *= r2 / ((kk + 1.0) * (n + kk + 1.0));
    }
    throw ConvergenceError("series (incomplete-gamma form) hit the term cap", pref * sum,
                           ctl.max_terms);
}

double marcum_identity(double m, double r, double b) {
    detail::require(std::isfinite(m) && std::isfinite(r) && std::isfinite(b),
                    "parameters must be finite");
    detail::require(m > 0.0, "m must be positive");
    detail::require(r > 0.0, "r must be positive");
    detail::require(b >= 0.0, "B must be non-negative");
    const double sqrt2 = std::sqrt(2.0);
    return 1.0 - sf::marcum_q(0.5 * (m + 1.0), r * sqrt2, b * sqrt2);
}

EvalResult lower_bound(const TorontoParams &p, const QuadSpec &spec) {
    p.validate();
    const double n_snap = snap_up_half_odd(p.n);
    detail::require(p.m >= n_snap, "snapped order violates m >= n");
    return closed_form(TorontoParams{p.m, n_snap, p.r, p.b}, spec);
}

EvalResult upper_bound(const TorontoParams &p, const QuadSpec &spec) {
    p.validate();
    const double n_snap = snap_down_half_odd(p.n);
    detail::require(n_snap >= 0.0, "no half-odd order below n exists (n < 0.5)");
    return closed_form(TorontoParams{p.m, n_snap, p.r, p.b}, spec);
}

BoundPair bounds(const TorontoParams &p, const QuadSpec &spec) {
    BoundPair out;
    out.n_lower_snap = snap_up_half_odd(p.n);
    out.n_upper_snap = snap_down_half_odd(p.n);
    out.lower = lower_bound(p, spec).value;
    out.upper = upper_bound(p, spec).value;
    return out;
}

} // namespace tilh::toronto
