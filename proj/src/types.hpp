/*
 * (C) Copyright 2026 tilh developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef TILH_TYPES_HPP
#define TILH_TYPES_HPP

#include <cmath>
#include <string>

#include "errors.hpp"

namespace tilh {

// Largest Bessel argument the power series is validated for; bounds the
// oracle domains (2 r B for the Toronto integrand, z for the ILHI one).
inline constexpr double kBesselArgMax = 40.0;

// Slack used when deciding whether a floating-point order sits on the
// half-odd lattice or an exponent is an integer.
inline constexpr double kLatticeTol = 1e-9;

enum class Method { closed_form, series_3, series_4, oracle };

inline const char *method_name(Method m) {
    switch (m) {
    case Method::closed_form: return "closed";
    case Method::series_3: return "series3";
    case Method::series_4: return "series4";
    case Method::oracle: return "oracle";
    }
    return "?";
}

/// Value plus how it was obtained.  error_estimate is a quadrature error
/// bound when method == oracle and 0 otherwise; steps counts series terms
/// or quadrature subdivisions.
struct EvalResult {
    double value = 0.0;
    Method method = Method::closed_form;
    double error_estimate = 0.0;
    long steps = 0;
};

/// Lower/upper closed-form bounds with the half-odd orders they were
/// evaluated at.
struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
    double n_lower_snap = 0.0; // smallest half-odd order >= n
    double n_upper_snap = 0.0; // largest half-odd order <= n
};

/// Series truncation control.  The stopping rule requires
/// |term| / |partial sum| < rel_tol for three consecutive terms.
struct SeriesControl {
    double rel_tol = 1e-14;
    long max_terms = 10000;
};

struct QuadSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-11;
    int max_subdivisions = 2000;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions_used = 0;
};

inline bool is_nonneg_integer(double x) {
    const double k = std::round(x);
    return k >= -0.5 && std::abs(x - k) <= kLatticeTol;
}

/// n is an odd multiple of 1/2 (0.5, 1.5, 2.5, ...).
inline bool is_half_odd(double n) { return is_nonneg_integer(n - 0.5); }

/// Smallest half-odd order >= n.
inline double snap_up_half_odd(double n) { return std::ceil(n + 0.5 - kLatticeTol) - 0.5; }

/// Largest half-odd order <= n; negative when n < 0.5.
inline double snap_down_half_odd(double n) { return std::floor(n - 0.5 + kLatticeTol) + 0.5; }

namespace detail {
inline void require(bool ok, const char *msg) {
    if (!ok) throw DomainError(msg);
}
inline bool finite(double x) { return std::isfinite(x); }
} // namespace detail

/// Parameters of T_B(m,n,r): the integral over [0,B] of
/// 2 r^{n-m+1} e^{-r^2} t^{m-n} e^{-t^2} I_n(2rt).
struct TorontoParams {
    double m = 1.0;
    double n = 0.5;
    double r = 1.0;
    double b = 1.0; // upper integration limit B

    void validate() const {
        using detail::require;
        require(detail::finite(m) && detail::finite(n) && detail::finite(r) && detail::finite(b),
                "parameters must be finite");
        require(m > 0.0, "m must be positive");
        require(n >= 0.0, "n must be non-negative");
        require(m >= n, "m >= n is required");
        require(r > 0.0, "r must be positive");
        require(b >= 0.0, "B must be non-negative");
    }
};

/// Parameters of Ie_{m,n}(a,z): the integral over [0,z] of x^m e^{-ax} I_n(x).
struct IlhiParams {
    double m = 1.0;
    double n = 0.5;
    double a = 2.0; // exponential decay rate
    double z = 1.0; // upper integration limit

    void validate() const {
        using detail::require;
        require(detail::finite(m) && detail::finite(n) && detail::finite(a) && detail::finite(z),
                "parameters must be finite");
        require(m > 0.0, "m must be positive");
        require(n >= 0.0, "n must be non-negative");
        require(m >= n, "m >= n is required");
        require(a > 0.0, "a must be positive");
        require(z >= 0.0, "z must be non-negative");
    }
};

} // namespace tilh

#endif
