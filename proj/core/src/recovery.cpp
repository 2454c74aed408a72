#include "pstein/recovery.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pstein/errors.hpp"

namespace pstein {

namespace {

std::vector<Matrix> power_table(const PeriodicOperator& op, const Matrix& m) {
  std::vector<Matrix> t;
  t.reserve(static_cast<std::size_t>(op.period()));
  t.push_back(m);
  for (int i = 1; i < op.period(); ++i) t.push_back(op.apply(t.back()));
  return t;
}

void gate_stein_solution(const LinearMatrixEquation& eq, const Matrix& x,
                         const RecoveryOptions& opts) {
  const SteinSystem sys = build_stein(eq);
  const double res = stein_residual(sys, x);
  const double bound = opts.stein_gate_tol * (1.0 + frob_norm(x));
  if (!(res <= bound)) {
    std::ostringstream os;
    os.precision(6);
    os << std::scientific
       << "recovery input does not solve the associated Stein equation: "
          "residual "
       << res << " exceeds gate " << bound;
    throw NotASteinSolutionError(os.str(), res);
  }
}

}  // namespace

Matrix orbit_average(const LinearMatrixEquation& eq, const Matrix& x) {
  const int n = eq.period();
  Matrix acc = x;
  Matrix sum = x;
  for (int i = 1; i < n; ++i) {
    acc = apply_rhs(eq, acc);
    sum += acc;
  }
  return sum / static_cast<double>(n);
}

Matrix explicit_average(const LinearMatrixEquation& eq, const Matrix& x) {
  if (x.rows() != eq.dim() || x.cols() != eq.dim()) {
    throw DimensionError("explicit_average: X must match the equation size");
  }
  const int n = eq.period();
  const Matrix id = Matrix::identity(eq.dim());

  if (eq.op.order_preserving()) {
    // (1/n) sum_i [ left_i f^(i)(X) right_i + (n-i-1) left_i f^(i)(C) right_i ]
    const std::vector<Matrix> fa = power_table(eq.op, eq.a);
    const std::vector<Matrix> fb = power_table(eq.op, eq.b);
    const std::vector<Matrix> fc = power_table(eq.op, eq.c);
    const std::vector<Matrix> fx = power_table(eq.op, x);
    Matrix left = id;
    Matrix right = id;
    Matrix total(eq.dim(), eq.dim());
    for (int i = 0; i < n; ++i) {
      const std::size_t e = static_cast<std::size_t>(i);
      total += left * (fx[e] + static_cast<double>(n - i - 1) * fc[e]) * right;
      left = left * fa[e];
      right = fb[e] * right;
    }
    return total / static_cast<double>(n);
  }

  // Order-reversing: two steps at a time, mirroring build_stein.
  const std::vector<Matrix> fa = power_table(eq.op, eq.a);
  const std::vector<Matrix> fb = power_table(eq.op, eq.b);
  const std::vector<Matrix> fc = power_table(eq.op, eq.c);
  const std::vector<Matrix> fx = power_table(eq.op, x);
  Matrix left = id;
  Matrix right = id;
  Matrix total(eq.dim(), eq.dim());
  for (int i = 0; i + 1 < n; i += 2) {
    const std::size_t e = static_cast<std::size_t>(i);
    const Matrix inner = fx[e] + static_cast<double>(n - i - 1) * fc[e] +
                         fa[e] *
                             (fx[e + 1] + static_cast<double>(n - i - 2) * fc[e + 1]) *
                             fb[e];
    total += left * inner * right;
    left = left * fa[e] * fb[e + 1];
    right = fa[e + 1] * fb[e] * right;
  }
  if (n % 2 == 1) {
    total += left * fx[static_cast<std::size_t>(n - 1)] * right;
  }
  return total / static_cast<double>(n);
}

Matrix weighted_average(const LinearMatrixEquation& eq, const Matrix& x) {
  if (!eq.op.order_preserving()) {
    throw UnsupportedOperatorError(
        "weighted_average is only defined for order-preserving operators; "
        "operator '" +
        eq.op.name() + "' is order-reversing");
  }
  const int n = eq.period();
  const std::vector<Matrix> fa = power_table(eq.op, eq.a);
  const std::vector<Matrix> fb = power_table(eq.op, eq.b);
  const std::vector<Matrix> fc = power_table(eq.op, eq.c);
  const std::vector<Matrix> fx = power_table(eq.op, x);
  Matrix left = Matrix::identity(eq.dim());
  Matrix right = Matrix::identity(eq.dim());
  Matrix prefix(eq.dim(), eq.dim());  // sum_{j<i} G_j(C)
  Matrix total(eq.dim(), eq.dim());
  for (int i = 0; i < n; ++i) {
    const std::size_t e = static_cast<std::size_t>(i);
    total += left * fx[e] * right + prefix;
    prefix += left * fc[e] * right;
    left = left * fa[e];
    right = fb[e] * right;
  }
  return total / static_cast<double>(n);
}

Matrix multi_period_average(const LinearMatrixEquation& eq, const Matrix& x, int k) {
  if (k < 1) throw std::invalid_argument("multi_period_average: k must be >= 1");
  const int total_steps = k * eq.period();
  // (1/(kn)) sum_{i<kn} [ H_i(X) + (kn-1-i) H_i(C) ], which telescopes to
  // the average of the first kn right-hand side compositions.
  Matrix hx = x;
  Matrix hc = eq.c;
  Matrix sum = x + static_cast<double>(total_steps - 1) * eq.c;
  for (int i = 1; i < total_steps; ++i) {
    hx = eq.a * eq.op.apply(hx) * eq.b;
    hc = eq.a * eq.op.apply(hc) * eq.b;
    sum += hx + static_cast<double>(total_steps - 1 - i) * hc;
  }
  return sum / static_cast<double>(total_steps);
}

LinearMatrixEquation substituted_equation(const LinearMatrixEquation& eq, int k) {
  if (k < 1) throw std::invalid_argument("substituted_equation: k must be >= 1");
  const SteinSystem powered = build_stein_power(eq, k);
  return LinearMatrixEquation(
      powered.cal_a * eq.a, eq.b * powered.cal_b,
      powered.cal_a * eq.c * powered.cal_b + powered.cal_c, eq.op);
}

Matrix substituted_average(const LinearMatrixEquation& eq, const Matrix& y, int k) {
  return orbit_average(substituted_equation(eq, k), y);
}

Matrix recover(const LinearMatrixEquation& eq, const Matrix& x,
               const RecoveryOptions& opts) {
  gate_stein_solution(eq, x, opts);
  return orbit_average(eq, x);
}

Matrix recover_explicit(const LinearMatrixEquation& eq, const Matrix& x,
                        const RecoveryOptions& opts) {
  gate_stein_solution(eq, x, opts);
  return explicit_average(eq, x);
}

Matrix recover_weighted(const LinearMatrixEquation& eq, const Matrix& x,
                        const RecoveryOptions& opts) {
  gate_stein_solution(eq, x, opts);
  return weighted_average(eq, x);
}

Matrix recover_multi_period(const LinearMatrixEquation& eq, const Matrix& x,
                            int k, const RecoveryOptions& opts) {
  gate_stein_solution(eq, x, opts);
  return multi_period_average(eq, x, k);
}

Matrix recover_substituted(const LinearMatrixEquation& eq, const Matrix& y,
                           int k, const RecoveryOptions& opts) {
  gate_stein_solution(eq, y, opts);
  return substituted_average(eq, y, k);
}

IdempotenceReport idempotence_check(const LinearMatrixEquation& eq,
                                    const Matrix& x, double tol,
                                    const RecoveryOptions& opts) {
  gate_stein_solution(eq, x, opts);
  const Matrix once = orbit_average(eq, x);
  const Matrix twice = orbit_average(eq, once);
  IdempotenceReport report;
  report.deviation = frob_dist(twice, once);
  report.tol = tol;
  report.passed = report.deviation <= tol;
  return report;
}

}  // namespace pstein
