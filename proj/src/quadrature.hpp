/*
 * (C) Copyright 2026 tilh developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef TILH_QUADRATURE_HPP
#define TILH_QUADRATURE_HPP

#include <functional>

#include "types.hpp"

namespace tilh::quad {

/// Globally adaptive integration of f over [lo, hi] with a Gauss-Kronrod
/// 7/15 pair on each panel; the worst panel is bisected until the summed
/// error estimate meets max(abs_tol, rel_tol * |value|).  Throws
/// ToleranceError (carrying the best estimate) when the subdivision budget
/// runs out.
QuadResult integrate(const std::function<double(double)> &f, double lo, double hi,
                     const QuadSpec &spec = {});

/// Ground truth for T_B(m,n,r): direct integration of the defining
/// integrand.  The Bessel kernel is evaluated through its scaled series, so
/// integrands with m < n never form a negative power of t.  Requires
/// 2 r B <= 40 (validated range of the Bessel series).
QuadResult toronto_oracle(const TorontoParams &p, const QuadSpec &spec = {});

/// Ground truth for Ie_{m,n}(a,z); any a > 0 is accepted here, including
/// a in (0,1) where the closed form does not apply.  Requires z <= 40.
QuadResult ilhi_oracle(const IlhiParams &p, const QuadSpec &spec = {});

} // namespace tilh::quad

#endif
