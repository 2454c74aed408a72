#ifndef PSTEIN_SOLVERS_HPP
#define PSTEIN_SOLVERS_HPP

#include <string>
#include <vector>

#include "pstein/matrix.hpp"
#include "pstein/solvability.hpp"
#include "pstein/stein_transform.hpp"

namespace pstein {

enum class SolveMethod {
  kDirect,    ///< dense solve of the column-stacked linear system
  kSmith,     ///< X <- calA X calB + calC
  kSmithEll,  ///< ell steps of Smith per iteration, precomposed
  kRSmith,    ///< coefficient squaring (r-th powers), doubly exponential rate
};

std::string to_string(SolveMethod method);

struct SolverConfig {
  SolveMethod method = SolveMethod::kDirect;
  /// Relative stop tolerance on the iterate update.
  double tol = 1e-12;
  int max_iter = 10000;
  /// Block size for kSmithEll; ell = 1 reproduces kSmith exactly.
  int ell = 1;
  /// Power for kRSmith; must be >= 2.
  int r = 2;
  /// Keep every iterate in the result (for rate studies); off by default.
  bool keep_iterates = false;
  /// Use the published constant-term update for kRSmith instead of the
  /// derivation-consistent one. The published line re-sums the constant
  /// term every round, so the iterate collapses toward calC instead of
  /// accumulating the full series; it is kept only so the two updates can
  /// be compared side by side.
  bool r_smith_literal = false;
};

/// Outcome of one iterative solver run.
struct IterativeResult {
  Matrix solution;
  int iterations = 0;
  /// ||X_{k+1} - X_k||_F per iteration.
  std::vector<double> update_norms;
  /// All iterates X_1, X_2, ... when keep_iterates was set.
  std::vector<Matrix> iterates;
};

/// Solve the Stein equation by column-stacking: the solution is
/// unvec((I - calB^T kron calA)^{-1} vec(calC)). Throws
/// SingularMatrixError when the linearization is numerically singular.
Matrix solve_direct(const SteinSystem& sys);

/// Minimum-norm least-squares solution of the same linear system; the
/// fallback used when the linearization is singular but consistent.
Matrix solve_direct_least_squares(const SteinSystem& sys);

/// Fixed-point iteration X_{k+1} = calA X_k calB + calC from X_0 = 0.
/// Converges iff rho(calA) rho(calB) < 1, at that geometric rate. Throws
/// DivergenceError when the budget is exhausted or an iterate blows up.
IterativeResult solve_smith(const SteinSystem& sys, const SolverConfig& cfg);

/// Same fixed point with ell Smith steps fused into one:
/// X_{k+1} = calA^ell X_k calB^ell + sum_{i<ell} calA^i calC calB^i.
IterativeResult solve_smith_ell(const SteinSystem& sys, const SolverConfig& cfg);

/// Coefficient-powering iteration: starting from A_0 = calA, B_0 = calB,
/// X_0 = calC,
///
///   X_{k+1} = sum_{i<r} A_k^i X_k B_k^i,  A_{k+1} = A_k^r,  B_{k+1} = B_k^r,
///
/// so X_k equals the first r^k Smith partial sums and the error decays
/// like rho^(r^k).
IterativeResult solve_r_smith(const SteinSystem& sys, const SolverConfig& cfg);

/// Full pipeline report for one equation.
struct SolveReport {
  Matrix solution;        ///< solution of the original equation
  Matrix stein_solution;  ///< solution of the associated Stein equation
  double stein_residual = 0.0;
  double eq_residual = 0.0;
  int iterations = 0;  ///< 0 for the direct method
  SolveMethod method = SolveMethod::kDirect;
  double rho = 0.0;
  SolvabilityReport solvability;
  std::vector<std::string> warnings;
};

/// Build the Stein system, run diagnostics, solve it with the configured
/// method, and recover a solution of the original equation.
///
/// A singular direct linearization falls back to the least-squares
/// solution with a warning; if even that fails the Stein equation (the
/// system is inconsistent) an UnsolvableError is thrown. Iterative
/// methods throw DivergenceError as described above.
SolveReport solve(const LinearMatrixEquation& eq, const SolverConfig& cfg = {});

}  // namespace pstein

#endif  // PSTEIN_SOLVERS_HPP
