/*
 * (C) Copyright 2026 tilh developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef TILH_ERRORS_HPP
#define TILH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tilh {

/// Argument outside the documented domain; the message names the violated
/// precondition.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A series hit its term cap before the stopping rule was satisfied.
/// Carries the last partial sum and the number of terms accumulated.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string &msg, double partial_sum, long terms)
        : std::runtime_error(msg), partial_sum_(partial_sum), terms_(terms) {}

    double partial_sum() const { return partial_sum_; }
    long terms() const { return terms_; }

  private:
    double partial_sum_;
    long terms_;
};

/// Adaptive quadrature ran out of subdivisions before meeting the requested
/// tolerance.  Carries the best estimate obtained and its error bound.
class ToleranceError : public std::runtime_error {
  public:
    ToleranceError(const std::string &msg, double best_value, double error_estimate,
                   int subdivisions)
        : std::runtime_error(msg), best_value_(best_value),
          error_estimate_(error_estimate), subdivisions_(subdivisions) {}

    double best_value() const { return best_value_; }
    double error_estimate() const { return error_estimate_; }
    int subdivisions() const { return subdivisions_; }

  private:
    double best_value_;
    double error_estimate_;
    int subdivisions_;
};

} // namespace tilh

#endif
