#ifndef PSTEIN_OPERATORS_HPP
#define PSTEIN_OPERATORS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pstein/matrix.hpp"

namespace pstein {

/// How an operator interacts with matrix products: order-preserving means
/// f(XY) = f(X) f(Y), order-reversing means f(XY) = f(Y) f(X). Both kinds
/// are additive, and f applied period-many times is the identity.
enum class OperatorKind {
  kOrderPreserving,
  kOrderReversing,
};

/// An additive, product-compatible self-map of square matrices together
/// with a declared period n such that applying it n times is the identity.
///
/// The declared period need not be minimal; any multiple of the minimal
/// period describes the same map and is accepted everywhere downstream.
class PeriodicOperator {
 public:
  using ApplyFn = std::function<Matrix(const Matrix&)>;

  /// User-defined operator. `fixed_dim` restricts the operator to one
  /// matrix size (as permutation similarity does); leave empty for
  /// size-generic maps.
  PeriodicOperator(std::string name, int period, OperatorKind kind,
                   ApplyFn apply, std::optional<int> fixed_dim = std::nullopt);

  const std::string& name() const { return name_; }
  int period() const { return period_; }
  OperatorKind kind() const { return kind_; }
  bool order_preserving() const { return kind_ == OperatorKind::kOrderPreserving; }
  std::optional<int> fixed_dim() const { return fixed_dim_; }

  /// f(x). Throws DimensionError on non-square input or a fixed-dim
  /// mismatch.
  Matrix apply(const Matrix& x) const;

  /// f applied i times, i >= 0. apply_power(0, x) returns x unchanged.
  Matrix apply_power(int i, const Matrix& x) const;

 private:
  std::string name_;
  int period_;
  OperatorKind kind_;
  ApplyFn apply_;
  std::optional<int> fixed_dim_;
};

/// The identity map. A declared period > 1 is legitimate (any positive
/// integer is a period of the identity) and changes the associated Stein
/// construction; the scalar counterexample in the README relies on this.
PeriodicOperator identity_op(int declared_period = 1);

/// X -> X^T, order-reversing, period 2.
PeriodicOperator transpose_op();

/// X -> conj(X)^T, order-reversing, period 2.
PeriodicOperator hermitian_op();

/// X -> conj(X), order-preserving, period 2.
PeriodicOperator conjugate_op();

/// Reflection over the anti-diagonal, f(X)(i,j) = X(m-1-j, m-1-i).
/// Equals J X^T J for the reversal permutation J; order-reversing, period 2.
PeriodicOperator anti_transpose_op();

/// X -> P^T X P for a permutation matrix P. Order-preserving; the period
/// is the multiplicative order of P (the lcm of its cycle lengths). Only
/// defined for matrices of P's size.
PeriodicOperator perm_similarity_op(const Matrix& p);

/// Parameters a builtin may take when constructed by name.
struct BuiltinOperatorParams {
  /// Optional declared period; must be a positive multiple of the
  /// operator's minimal period.
  std::optional<int> declared_period;
  /// Permutation for perm_similarity, as an index array p where the
  /// matrix has a one in row p[j] of column j.
  std::optional<std::vector<int>> permutation;
};

/// Construct a builtin by name: "identity", "transpose", "hermitian",
/// "conjugate", "anti_transpose", "perm_similarity". Throws
/// std::invalid_argument for unknown names or invalid parameters.
PeriodicOperator make_builtin(const std::string& name,
                              const BuiltinOperatorParams& params = {});

/// Permutation matrix from an index array (one in row p[j] of column j).
/// Validates that p is a permutation of 0..m-1.
Matrix permutation_matrix(const std::vector<int>& p);

/// The cyclic-shift permutation of size m: ones on the first
/// superdiagonal and in the lower-left corner. Its multiplicative order
/// is m.
Matrix primary_permutation(int m);

/// Measured deviations of an operator from its declared laws, maxima over
/// all trials of a seeded randomized check.
struct OperatorCheckReport {
  double additivity_err = 0.0;        ///< max ||f(X+Y) - f(X) - f(Y)||_F
  double multiplicativity_err = 0.0;  ///< max deviation from the declared product law
  double periodicity_err = 0.0;       ///< max ||f^(n)(X) - X||_F
  int trials = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool passed = false;  ///< all three deviations within tol
};

/// Verify additivity, the declared product law, and the declared period on
/// `trials` pseudo-random matrix pairs of size dim x dim. Deterministic
/// for a fixed seed.
OperatorCheckReport check_operator(const PeriodicOperator& op, int dim,
                                   int trials, std::uint64_t seed,
                                   double tol = 1e-12);

}  // namespace pstein

#endif  // PSTEIN_OPERATORS_HPP
