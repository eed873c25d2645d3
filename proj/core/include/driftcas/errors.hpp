#pragma once

#include <stdexcept>
#include <string>

namespace driftcas {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A fitted material model produced an unphysical value (e.g. tau <= 0).
class ModelValidityError : public Error {
 public:
  using Error::Error;
};

/// A closed-form expression could not be evaluated at a mode.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double k, double xi)
      : Error(what + " (k=" + std::to_string(k) + " 1/cm, xi=" + std::to_string(xi) +
              " rad/s)"),
        k_(k),
        xi_(xi) {}
  double k() const noexcept { return k_; }
  double xi() const noexcept { return xi_; }

 private:
  double k_;
  double xi_;
};

/// Adaptive quadrature failed to reach its tolerance.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double estimate, double error)
      : Error(what), estimate_(estimate), error_(error) {}
  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

/// Matsubara series did not converge within the term cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double partial, long terms)
      : Error(what), partial_(partial), terms_(terms) {}
  double partial() const noexcept { return partial_; }
  long terms() const noexcept { return terms_; }

 private:
  double partial_;
  long terms_;
};

}  // namespace driftcas
