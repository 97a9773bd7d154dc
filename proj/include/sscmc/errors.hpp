#ifndef SSCMC_ERRORS_HPP
#define SSCMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sscmc {

// Base class for failures of the numerical machinery (quadrature, root
// finding).  Precondition violations use std::domain_error /
// std::invalid_argument instead.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class ConvergenceError : public NumericalError {
public:
  explicit ConvergenceError(const std::string& what) : NumericalError(what) {}
};

class QuadratureError : public NumericalError {
public:
  explicit QuadratureError(const std::string& what) : NumericalError(what) {}
};

// Thrown when a regularized integrand is detected to be non-integrable
// (stronger than an inverse square root endpoint singularity).
class NonIntegrableError : public QuadratureError {
public:
  explicit NonIntegrableError(const std::string& what) : QuadratureError(what) {}
};

}  // namespace sscmc

#endif
