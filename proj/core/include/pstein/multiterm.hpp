#ifndef PSTEIN_MULTITERM_HPP
#define PSTEIN_MULTITERM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pstein/matrix.hpp"
#include "pstein/operators.hpp"
#include "pstein/solvers.hpp"

namespace pstein {

/// The multiterm fixed-point problem
///
///   X = sum_k A_k f_k(X) B_k + C
///
/// for a homogeneous family of order-preserving operators: the f_k must
/// commute pairwise and every composition of `period` of them (with
/// repetitions, in any order) must be the identity. Order-reversing
/// members are rejected at construction; the homogeneity requirements are
/// checked separately (check_homogeneous) and asserted where the solver
/// depends on them.
struct MultiTermEquation {
  struct Term {
    Matrix a;
    Matrix b;
    PeriodicOperator op;
  };

  MultiTermEquation(std::vector<Term> terms, Matrix c, int period);

  std::vector<Term> terms;
  Matrix c;
  int period;

  int dim() const { return c.rows(); }
};

/// One application of the right-hand side, sum_k A_k f_k(X) B_k + C.
Matrix apply_rhs(const MultiTermEquation& eq, const Matrix& x);

/// i-fold composition of the right-hand side with itself.
Matrix iterate_rhs(const MultiTermEquation& eq, int i, const Matrix& x);

/// Homogeneous part iterated i times by the recursion K_0(X) = X,
/// K_{i+1}(X) = sum_k A_k f_k(K_i(X)) B_k. Expands to a sum over index
/// tuples of length i (one coefficient pair per factor); the expansion is
/// exercised as a test property, the recursion is the implementation.
Matrix term_iterate(const MultiTermEquation& eq, int i, const Matrix& x);

/// Measured deviations of a family from the homogeneity requirements.
struct HomogeneityReport {
  double commuting_err = 0.0;    ///< max ||f_i(f_j(X)) - f_j(f_i(X))||_F
  double composition_err = 0.0;  ///< max ||composition of period ops (X) - X||_F
  int trials = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool passed = false;
};

/// Check pairwise commuting and that every multiset of `period` operators
/// from the family composes to the identity, on seeded random matrices.
HomogeneityReport check_homogeneous(std::span<const PeriodicOperator> family,
                                    int period, int dim, int trials,
                                    std::uint64_t seed, double tol = 1e-10);

/// The linear system behind the multiterm equation: X = K_n applied to X
/// plus the accumulated constant, column-stacked into
/// coefficient * vec(X) + vec(constant).
struct GeneralizedStein {
  /// m^2 x m^2 matrix of K_n in the column-stacked basis.
  Matrix coefficient;
  /// sum_{i<n} K_i(C).
  Matrix constant;
};

/// Assemble the generalized Stein system by applying K_n to the matrix
/// units. K_n is complex-linear precisely because every period-length
/// composition of the family is the identity (conjugations cancel); this
/// is asserted numerically on a random complex probe rather than assumed,
/// and a failing probe raises HomogeneityError.
GeneralizedStein build_generalized_stein(const MultiTermEquation& eq);

/// The averaging map (1/n) * sum_{i<n} of right-hand side compositions,
/// the multiterm analog of orbit_average.
Matrix multiterm_orbit_average(const MultiTermEquation& eq, const Matrix& x);

/// Verify homogeneity, solve the generalized Stein system directly (with
/// the same least-squares fallback as the single-term pipeline), and
/// recover a solution of the original equation via the averaging map.
/// `tol` is the relative consistency gate on the generalized Stein
/// residual; exceeding it raises UnsolvableError.
///
/// Report conventions for the multiterm case: stein_solution and
/// stein_residual refer to the generalized Stein system; rho is the
/// spectral radius of its coefficient matrix, and the solvability block
/// records that spectrum against the single point {1} (unique solvability
/// is exactly 1 not being an eigenvalue).
SolveReport solve_multiterm(const MultiTermEquation& eq, double tol = 1e-8);

}  // namespace pstein

#endif  // PSTEIN_MULTITERM_HPP
