#ifndef PSTEIN_ERRORS_HPP
#define PSTEIN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pstein {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape or conformability violation (non-square input, mismatched sizes).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A dense solve hit a numerically singular coefficient matrix.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, double rcond)
      : Error(what), rcond_(rcond) {}
  /// Reciprocal condition number estimate of the offending matrix.
  double rcond() const { return rcond_; }

 private:
  double rcond_;
};

/// The eigenvalue backend failed to converge.
class EigenDecompositionError : public Error {
 public:
  using Error::Error;
};

/// Operation requested for an operator kind it is not defined for
/// (for example the explicit product form of an order-reversing operator).
class UnsupportedOperatorError : public Error {
 public:
  using Error::Error;
};

/// Recovery was asked to run on a matrix that does not satisfy the
/// associated Stein equation within the gate tolerance.
class NotASteinSolutionError : public Error {
 public:
  NotASteinSolutionError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  /// Frobenius norm of the offending Stein residual.
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// An iterative solver failed to converge within its iteration budget.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, double rho,
                  std::vector<double> update_norms)
      : Error(what), rho_(rho), update_norms_(std::move(update_norms)) {}
  /// Product of the coefficient spectral radii driving the iteration.
  double rho() const { return rho_; }
  /// Norms of the successive iterate updates, for post-mortem inspection.
  const std::vector<double>& update_norms() const { return update_norms_; }

 private:
  double rho_;
  std::vector<double> update_norms_;
};

/// The equation was diagnosed as having no solution.
class UnsolvableError : public Error {
 public:
  using Error::Error;
};

/// A multiterm operator family failed the homogeneity requirements
/// (pairwise commuting, every period-length composition the identity).
class HomogeneityError : public Error {
 public:
  using Error::Error;
};

/// A JSON equation document failed validation. Carries one message per
/// problem, each prefixed with the JSON path of the offending element.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::vector<std::string> issues)
      : Error(what), issues_(std::move(issues)) {}
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

}  // namespace pstein

#endif  // PSTEIN_ERRORS_HPP
