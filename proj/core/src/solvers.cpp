#include "pstein/solvers.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "pstein/errors.hpp"
#include "pstein/linalg.hpp"
#include "pstein/recovery.hpp"

namespace pstein {

namespace {

/// Entry bound past which an iteration is declared divergent instead of
/// letting the arithmetic overflow.
constexpr double kBlowupLimit = 1e60;

double rho_of(const SteinSystem& sys) {
  return spectral_radius(sys.cal_a) * spectral_radius(sys.cal_b);
}

[[noreturn]] void throw_divergence(const SteinSystem& sys, const char* what,
                                   int iterations,
                                   std::vector<double> update_norms) {
  const double rho = rho_of(sys);
  std::ostringstream os;
  os.precision(6);
  os << what << " after " << iterations
     << " iterations (rho(calA) * rho(calB) = " << std::scientific << rho << ")";
  throw DivergenceError(os.str(), rho, std::move(update_norms));
}

bool converged(double update, const Matrix& x, double tol) {
  return update <= tol * (1.0 + frob_norm(x));
}

Matrix matrix_power(const Matrix& a, int e) {
  Matrix out = Matrix::identity(a.rows());
  for (int i = 0; i < e; ++i) out = out * a;
  return out;
}

}  // namespace

std::string to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::kDirect:
      return "direct";
    case SolveMethod::kSmith:
      return "smith";
    case SolveMethod::kSmithEll:
      return "smith-l";
    case SolveMethod::kRSmith:
      return "r-smith";
  }
  return "unknown";
}

Matrix solve_direct(const SteinSystem& sys) {
  const int m = sys.dim();
  const Matrix coeff =
      Matrix::identity(m * m) - kron(sys.cal_b.transpose(), sys.cal_a);
  const Matrix x = solve_dense(coeff, vec(sys.cal_c));
  return unvec(x, m, m);
}

Matrix solve_direct_least_squares(const SteinSystem& sys) {
  const int m = sys.dim();
  const Matrix coeff =
      Matrix::identity(m * m) - kron(sys.cal_b.transpose(), sys.cal_a);
  return unvec(solve_least_squares(coeff, vec(sys.cal_c)), m, m);
}

IterativeResult solve_smith(const SteinSystem& sys, const SolverConfig& cfg) {
  SolverConfig ell_cfg = cfg;
  ell_cfg.ell = 1;
  return solve_smith_ell(sys, ell_cfg);
}

IterativeResult solve_smith_ell(const SteinSystem& sys, const SolverConfig& cfg) {
  if (cfg.ell < 1) {
    throw std::invalid_argument("solve_smith_ell: ell must be >= 1, got " +
                                std::to_string(cfg.ell));
  }
  // Precompose ell plain steps: the iteration map becomes
  // X -> calA^ell X calB^ell + sum_{i<ell} calA^i calC calB^i, so one
  // update covers ell Smith updates.
  Matrix a_ell = Matrix::identity(sys.dim());
  Matrix b_ell = Matrix::identity(sys.dim());
  Matrix c_ell(sys.dim(), sys.dim());
  for (int i = 0; i < cfg.ell; ++i) {
    c_ell += a_ell * sys.cal_c * b_ell;
    a_ell = a_ell * sys.cal_a;
    b_ell = sys.cal_b * b_ell;
  }

  IterativeResult result;
  result.solution = Matrix(sys.dim(), sys.dim());
  for (int k = 0; k < cfg.max_iter; ++k) {
    if (max_abs(result.solution) > kBlowupLimit) {
      throw_divergence(sys, "smith iterate blew up", k,
                       std::move(result.update_norms));
    }
    Matrix next = a_ell * result.solution * b_ell + c_ell;
    const double update = frob_dist(next, result.solution);
    result.update_norms.push_back(update);
    result.solution = std::move(next);
    result.iterations = k + 1;
    if (cfg.keep_iterates) result.iterates.push_back(result.solution);
    if (converged(update, result.solution, cfg.tol)) return result;
  }
  throw_divergence(sys, "smith iteration did not converge", cfg.max_iter,
                   std::move(result.update_norms));
}

IterativeResult solve_r_smith(const SteinSystem& sys, const SolverConfig& cfg) {
  if (cfg.r < 2) {
    throw std::invalid_argument("solve_r_smith: r must be >= 2, got " +
                                std::to_string(cfg.r));
  }
  Matrix a_k = sys.cal_a;
  Matrix b_k = sys.cal_b;
  IterativeResult result;
  result.solution = sys.cal_c;  // the first partial sum
  if (cfg.keep_iterates) result.iterates.push_back(result.solution);
  for (int k = 0; k < cfg.max_iter; ++k) {
    if (max_abs(a_k) > kBlowupLimit || max_abs(b_k) > kBlowupLimit ||
        max_abs(result.solution) > kBlowupLimit) {
      throw_divergence(sys, "coefficient powers blew up", k,
                       std::move(result.update_norms));
    }
    // X_{k+1} = sum_{i<r} A_k^i X_k B_k^i. With cfg.r_smith_literal the
    // sum reuses calC in place of X_k, discarding the accumulated partial
    // sums; kept selectable for comparison only.
    const Matrix& base = cfg.r_smith_literal ? sys.cal_c : result.solution;
    Matrix next = base;
    Matrix left = Matrix::identity(sys.dim());
    Matrix right = Matrix::identity(sys.dim());
    for (int i = 1; i < cfg.r; ++i) {
      left = left * a_k;
      right = right * b_k;
      next += left * base * right;
    }
    const double update = frob_dist(next, result.solution);
    result.update_norms.push_back(update);
    result.solution = std::move(next);
    result.iterations = k + 1;
    if (cfg.keep_iterates) result.iterates.push_back(result.solution);
    if (converged(update, result.solution, cfg.tol)) return result;
    a_k = matrix_power(a_k, cfg.r);
    b_k = matrix_power(b_k, cfg.r);
  }
  throw_divergence(sys, "r-smith iteration did not converge", cfg.max_iter,
                   std::move(result.update_norms));
}

SolveReport solve(const LinearMatrixEquation& eq, const SolverConfig& cfg) {
  SolveReport report;
  report.method = cfg.method;

  const SteinSystem sys = build_stein(eq);
  report.solvability = check_unique(sys);
  report.rho = report.solvability.rho;
  if (!report.solvability.reciprocal_free) {
    report.warnings.push_back(
        "spectra of calA and calB are not reciprocal free: the Stein "
        "equation does not have a unique solution");
  }

  switch (cfg.method) {
    case SolveMethod::kDirect:
      try {
        report.stein_solution = solve_direct(sys);
      } catch (const SingularMatrixError& e) {
        std::ostringstream os;
        os.precision(3);
        os << "direct linearization is singular (rcond = " << std::scientific
           << e.rcond() << "); using the minimum-norm least-squares solution";
        report.warnings.push_back(os.str());
        report.stein_solution = solve_direct_least_squares(sys);
      }
      break;
    case SolveMethod::kSmith:
    case SolveMethod::kSmithEll:
    case SolveMethod::kRSmith: {
      if (report.rho >= 1.0) {
        report.warnings.push_back(
            "rho(calA) * rho(calB) >= 1: the fixed-point iteration has no "
            "convergence guarantee");
      }
      IterativeResult iterative;
      if (cfg.method == SolveMethod::kSmith) {
        iterative = solve_smith(sys, cfg);
      } else if (cfg.method == SolveMethod::kSmithEll) {
        iterative = solve_smith_ell(sys, cfg);
      } else {
        iterative = solve_r_smith(sys, cfg);
      }
      report.stein_solution = std::move(iterative.solution);
      report.iterations = iterative.iterations;
      break;
    }
  }

  report.stein_residual = stein_residual(sys, report.stein_solution);
  const RecoveryOptions gate;
  const double gate_bound =
      gate.stein_gate_tol * (1.0 + frob_norm(report.stein_solution));
  if (!(report.stein_residual <= gate_bound)) {
    std::ostringstream os;
    os.precision(6);
    os << "no solution: the best solve of the Stein equation leaves residual "
       << std::scientific << report.stein_residual
       << ", so the system is inconsistent";
    throw UnsolvableError(os.str());
  }

  report.solution = orbit_average(eq, report.stein_solution);
  report.eq_residual = equation_residual(eq, report.solution);
  return report;
}

}  // namespace pstein
