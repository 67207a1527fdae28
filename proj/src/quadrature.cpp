/*
 * (C) Copyright 2026 tilh developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"
#include "special_core.hpp"

namespace tilh::quad {

namespace {

// Gauss-Kronrod 15-point nodes and weights on [-1,1] (QUADPACK dqk15),
// with the embedded 7-point Gauss weights on the odd-index nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo, hi;
    double value;
    double err;
};

Panel evaluate_panel(const std::function<double(double)> &f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(mid);
    double gauss = kWg[3] * fc;
    double kronrod = kWgk[7] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fs = f(mid - dx) + f(mid + dx);
        kronrod += kWgk[i] * fs;
        if (i % 2 == 1) gauss += kWg[i / 2] * fs;
    }
    gauss *= half;
    kronrod *= half;
    return Panel{lo, hi, kronrod, std::fabs(kronrod - gauss)};
}

} // namespace

QuadResult integrate(const std::function<double(double)> &f, double lo, double hi,
                     const QuadSpec &spec) {
    detail::require(spec.abs_tol > 0.0 && spec.rel_tol > 0.0, "tolerances must be positive");
    detail::require(spec.max_subdivisions >= 1, "max_subdivisions must be at least 1");
    if (lo == hi) return QuadResult{0.0, 0.0, 0};

    std::vector<Panel> panels;
    panels.push_back(evaluate_panel(f, lo, hi));
    double total = panels[0].value;
    double toterr = panels[0].err;

    int splits = 0;
    while (toterr > std::max(spec.abs_tol, spec.rel_tol * std::fabs(total))) {
        if (splits >= spec.max_subdivisions)
            throw ToleranceError("quadrature tolerance not met within the subdivision budget",
                                 total, toterr, splits);
        auto worst = std::max_element(panels.begin(), panels.end(),
                                      [](const Panel &a, const Panel &b) { return a.err < b.err; });
        const Panel old = *worst;
        const double mid = 0.5 * (old.lo + old.hi);
        const Panel left = evaluate_panel(f, old.lo, mid);
        const Panel right = evaluate_panel(f, mid, old.hi);
        total += left.value + right.value - old.value;
        toterr += left.err + right.err - old.err;
        *worst = left;
        panels.push_back(right);
        ++splits;
    }
    return QuadResult{total, toterr, splits};
}

QuadResult toronto_oracle(const TorontoParams &p, const QuadSpec &spec) {
    p.validate();
    detail::require(2.0 * p.r * p.b <= kBesselArgMax,
                    "oracle requires 2*r*B <= 40 (validated Bessel series range)");
    if (p.b == 0.0) return QuadResult{0.0, 0.0, 0};

    // t^{m-n} I_n(2rt) = r^n t^m [I_n(2rt) / (rt)^n]; the scaled series keeps
    // the integrand total at t = 0, and the analytic prefactor is applied
    // after integration so tiny results stay relatively accurate.
    const double m = p.m;
    const double n = p.n;
    const double r = p.r;
    auto f = [m, n, r](double t) {
        return std::pow(t, m) * std::exp(-t * t) * sf::bessel_i_series_scaled(n, 2.0 * r * t);
    };
    QuadResult res = integrate(f, 0.0, p.b, spec);
    const double prefactor = 2.0 * std::pow(r, 2.0 * n - m + 1.0) * std::exp(-r * r);
    res.value *= prefactor;
    res.error_estimate *= prefactor;
    return res;
}

QuadResult ilhi_oracle(const IlhiParams &p, const QuadSpec &spec) {
    p.validate();
    detail::require(p.z <= kBesselArgMax, "oracle requires z <= 40 (validated Bessel series range)");
    if (p.z == 0.0) return QuadResult{0.0, 0.0, 0};

    const double m = p.m;
    const double n = p.n;
    const double a = p.a;
    auto f = [m, n, a](double x) {
        return std::pow(x, m + n) * std::exp(-a * x) * sf::bessel_i_series_scaled(n, x);
    };
    QuadResult res = integrate(f, 0.0, p.z, spec);
    const double prefactor = std::exp2(-n);
    res.value *= prefactor;
    res.error_estimate *= prefactor;
    return res;
}

} // namespace tilh::quad
