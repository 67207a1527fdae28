/*
 * (C) Copyright 2026 tilh developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef TILH_TORONTO_HPP
#define TILH_TORONTO_HPP

#include "types.hpp"

namespace tilh::toronto {

/// Second argument handed to the incomplete gamma factors of series_4.
/// The squared form is the one that matches the defining integral; the
/// linear form reproduces a misprint found in the literature and exists
/// only so the discrepancy can be demonstrated.
enum class Series4GammaArg { b_squared, b_linear };

/// True when the finite closed-form double sum applies at (m, n): n
/// half-odd, m - n - 1/2 a non-negative integer, and every per-term
/// exponent m - n - k - 1/2 (k = 0 .. n - 1/2) non-negative, i.e. m >= 2n.
bool closed_form_available(double m, double n);

/// T_B(m,n,r) by the finite double sum of incomplete gamma terms in
/// (B-r)^2, (B+r)^2 and r^2.  Requires n half-odd and m - n - 1/2 a
/// non-negative integer; when m < 2n the sum does not exist and the value
/// is served by the quadrature oracle instead (result tagged
/// Method::oracle, with its error estimate).
EvalResult closed_form(const TorontoParams &p, const QuadSpec &spec = {});

/// Infinite series with the nested rising-factorial inner sum; outer
/// variable B^{2k}.  Valid for any real n >= 0 with m >= n.
EvalResult series_3(const TorontoParams &p, const SeriesControl &ctl = {});

/// Infinite series of incomplete gamma terms gamma(a+k, B^2), a = (m+1)/2.
EvalResult series_4(const TorontoParams &p, const SeriesControl &ctl = {},
                    Series4GammaArg arg = Series4GammaArg::b_squared);

/// 1 - Q_{(m+1)/2}(r sqrt 2, B sqrt 2), the Marcum special case at
/// n = (m-1)/2.
double marcum_identity(double m, double r, double b);

/// Closed form at the half-odd order just above n; a strict lower bound on
/// T_B(m,n,r) when n is not on the half-odd lattice (the function is
/// strictly decreasing in n).
EvalResult lower_bound(const TorontoParams &p, const QuadSpec &spec = {});

/// Closed form at the half-odd order just below n; strict upper bound for
/// off-lattice n.  Throws DomainError when n < 0.5 (no such order exists).
EvalResult upper_bound(const TorontoParams &p, const QuadSpec &spec = {});

BoundPair bounds(const TorontoParams &p, const QuadSpec &spec = {});

} // namespace tilh::toronto

#endif
