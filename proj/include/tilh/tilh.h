/*
 * (C) Copyright 2026 tilh developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/* tilh -- incomplete Toronto function T_B(m,n,r) and incomplete
 * Lipschitz-Hankel integrals Ie_{m,n}(a,z) of the first-kind modified
 * Bessel function.
 *
 * C interface to the shared library.  All evaluation routines are pure
 * functions of their arguments and are safe to call concurrently from
 * any number of threads.  Every routine returns a tilh_status; on
 * failure tilh_last_error() gives a one-line diagnostic (thread-local).
 */

#ifndef TILH_TILH_H
#define TILH_TILH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tilh_status {
    TILH_OK = 0,
    TILH_ERR_DOMAIN = 1,          /* argument outside the documented domain */
    TILH_ERR_NO_CONVERGENCE = 2,  /* series hit its term cap */
    TILH_ERR_TOLERANCE = 3,       /* quadrature could not meet the tolerance */
    TILH_ERR_INVALID_ARGUMENT = 4 /* null pointer or malformed option value */
} tilh_status;

/* How a returned value was produced. */
typedef enum tilh_method {
    TILH_METHOD_CLOSED_FORM = 0,
    TILH_METHOD_SERIES_3 = 1,
    TILH_METHOD_SERIES_4 = 2,
    TILH_METHOD_ORACLE = 3 /* adaptive quadrature of the defining integral */
} tilh_method;

typedef struct tilh_result {
    double value;
    double error_estimate; /* quadrature error bound when method is ORACLE, else 0 */
    int method;            /* a tilh_method value */
    long steps;            /* series terms used, or quadrature subdivisions */
} tilh_result;

typedef struct tilh_bound_pair {
    double lower;   /* closed form at the half-odd order just above n */
    double upper;   /* closed form at the half-odd order just below n */
    double n_lower; /* snapped order used for the lower bound */
    double n_upper; /* snapped order used for the upper bound */
} tilh_bound_pair;

/* Evaluation controls: series truncation and oracle quadrature settings.
 * A freshly created handle carries the library defaults
 * (series: rel_tol 1e-14, max_terms 10000;
 *  quadrature: abs_tol 1e-12, rel_tol 1e-11, max_subdivisions 2000).
 * Passing NULL wherever a tilh_options* is accepted means "defaults". */
typedef struct tilh_options tilh_options;

tilh_options *tilh_options_create(void);
void tilh_options_destroy(tilh_options *opt);
tilh_status tilh_options_set_series_rel_tol(tilh_options *opt, double rel_tol);
tilh_status tilh_options_set_series_max_terms(tilh_options *opt, long max_terms);
tilh_status tilh_options_set_quad_abs_tol(tilh_options *opt, double abs_tol);
tilh_status tilh_options_set_quad_rel_tol(tilh_options *opt, double rel_tol);
tilh_status tilh_options_set_quad_max_subdivisions(tilh_options *opt, long max_subdivisions);
/* Second gamma argument of the power series with incomplete-gamma terms:
 * the squared form (default, 1) matches the defining integral; the linear
 * form (0) reproduces a misprint found in the literature and is kept only
 * for comparison. */
tilh_status tilh_options_set_series4_gamma_squared(tilh_options *opt, int squared);

/* ---- foundation special functions ---- */

/* Rising factorial a(a+1)...(a+k-1); 1 for k = 0. */
tilh_status tilh_pochhammer(double a, long k, double *out);
/* Lower incomplete gamma integral of t^{s-1} e^{-t} over [0,x]; s > 0, x >= 0. */
tilh_status tilh_lower_incomplete_gamma(double s, double x, double *out);
/* Modified Bessel I_order(x) by its ascending power series; order >= 0, x >= 0. */
tilh_status tilh_bessel_i_series(double order, double x, double *out);
/* I_order(x) by the finite exponential form; requires order + 1/2 a natural number. */
tilh_status tilh_bessel_i_half_odd(double order, double x, double *out);
/* Generalized Marcum Q-function Q_order(a,b); order > 0, a >= 0, b >= 0. */
tilh_status tilh_marcum_q(double order, double a, double b, double *out);

/* ---- incomplete Toronto function T_B(m,n,r) ---- */

/* 1 when the finite closed-form sum applies at (m, n): n half-odd,
 * m - n - 1/2 a non-negative integer and every per-term exponent
 * m - n - k - 1/2 non-negative (equivalently m >= 2n).  Calls outside
 * that region are served by the quadrature oracle and tagged
 * TILH_METHOD_ORACLE in the result. */
int tilh_toronto_closed_form_available(double m, double n);

tilh_status tilh_toronto_closed_form(double m, double n, double r, double b,
                                     const tilh_options *opt, tilh_result *out);
tilh_status tilh_toronto_series3(double m, double n, double r, double b,
                                 const tilh_options *opt, tilh_result *out);
tilh_status tilh_toronto_series4(double m, double n, double r, double b,
                                 const tilh_options *opt, tilh_result *out);
/* 1 - Q_{(m+1)/2}(r sqrt 2, b sqrt 2); equals T_b(m,(m-1)/2,r). */
tilh_status tilh_toronto_marcum_identity(double m, double r, double b, double *out);
tilh_status tilh_toronto_lower_bound(double m, double n, double r, double b,
                                     const tilh_options *opt, tilh_result *out);
tilh_status tilh_toronto_upper_bound(double m, double n, double r, double b,
                                     const tilh_options *opt, tilh_result *out);
tilh_status tilh_toronto_bounds(double m, double n, double r, double b,
                                const tilh_options *opt, tilh_bound_pair *out);
/* Adaptive quadrature of the defining integral; error_estimate is filled. */
tilh_status tilh_toronto_oracle(double m, double n, double r, double b,
                                const tilh_options *opt, tilh_result *out);

/* ---- incomplete Lipschitz-Hankel integral Ie_{m,n}(a,z) ---- */

/* 1 when the closed form applies at (m, n, a): n half-odd and a >= 1. */
int tilh_ilhi_closed_form_available(double m, double n, double a);

tilh_status tilh_ilhi_closed_form(double m, double n, double a, double z,
                                  const tilh_options *opt, tilh_result *out);
tilh_status tilh_ilhi_lower_bound(double m, double n, double a, double z,
                                  const tilh_options *opt, tilh_result *out);
tilh_status tilh_ilhi_upper_bound(double m, double n, double a, double z,
                                  const tilh_options *opt, tilh_result *out);
tilh_status tilh_ilhi_bounds(double m, double n, double a, double z,
                             const tilh_options *opt, tilh_bound_pair *out);
tilh_status tilh_ilhi_oracle(double m, double n, double a, double z,
                             const tilh_options *opt, tilh_result *out);

/* ---- diagnostics ---- */

const char *tilh_status_name(tilh_status status);
/* Message from the most recent failing call in this thread; "" if none. */
const char *tilh_last_error(void);
const char *tilh_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TILH_TILH_H */
