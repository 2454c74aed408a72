#include "pstein/multiterm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "pstein/errors.hpp"
#include "pstein/linalg.hpp"
#include "pstein/random.hpp"

namespace pstein {

MultiTermEquation::MultiTermEquation(std::vector<Term> terms_, Matrix c_,
                                     int period_)
    : terms(std::move(terms_)), c(std::move(c_)), period(period_) {
  if (terms.empty()) {
    throw DimensionError("multiterm equation needs at least one term");
  }
  if (period < 1) {
    throw std::invalid_argument("multiterm period must be >= 1, got " +
                                std::to_string(period));
  }
  if (!c.is_square() || c.rows() == 0) {
    throw DimensionError("multiterm constant must be square and non-empty");
  }
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Term& term = terms[k];
    if (!term.a.is_square() || !term.b.is_square() ||
        term.a.rows() != c.rows() || term.b.rows() != c.rows()) {
      throw DimensionError("multiterm term " + std::to_string(k) +
                           " does not match the equation size " +
                           std::to_string(c.rows()));
    }
    if (!term.op.order_preserving()) {
      throw UnsupportedOperatorError(
          "multiterm families must be order-preserving; term " +
          std::to_string(k) + " uses order-reversing operator '" +
          term.op.name() + "'");
    }
    if (term.op.fixed_dim() && *term.op.fixed_dim() != c.rows()) {
      throw DimensionError("operator '" + term.op.name() + "' of term " +
                           std::to_string(k) + " is fixed to size " +
                           std::to_string(*term.op.fixed_dim()));
    }
  }
}

Matrix apply_rhs(const MultiTermEquation& eq, const Matrix& x) {
  if (x.rows() != eq.dim() || x.cols() != eq.dim()) {
    throw DimensionError("apply_rhs: X must be " + std::to_string(eq.dim()) +
                         " x " + std::to_string(eq.dim()));
  }
  Matrix out = eq.c;
  for (const MultiTermEquation::Term& term : eq.terms) {
    out += term.a * term.op.apply(x) * term.b;
  }
  return out;
}

Matrix iterate_rhs(const MultiTermEquation& eq, int i, const Matrix& x) {
  if (i < 0) throw std::invalid_argument("iterate_rhs: i must be >= 0");
  Matrix out = x;
  for (int k = 0; k < i; ++k) out = apply_rhs(eq, out);
  return out;
}

Matrix term_iterate(const MultiTermEquation& eq, int i, const Matrix& x) {
  if (i < 0) throw std::invalid_argument("term_iterate: i must be >= 0");
  Matrix out = x;
  for (int k = 0; k < i; ++k) {
    Matrix next(eq.dim(), eq.dim());
    for (const MultiTermEquation::Term& term : eq.terms) {
      next += term.a * term.op.apply(out) * term.b;
    }
    out = std::move(next);
  }
  return out;
}

namespace {

/// Visit every composition multiset (c_0, ..., c_{N-1}) with sum equal to
/// `remaining`, applying the family powers to `partial` and comparing the
/// fully composed result against the original trial matrix.
void visit_compositions(std::span<const PeriodicOperator> family,
                        std::size_t index, int remaining, const Matrix& partial,
                        const Matrix& original, double& worst) {
  if (index + 1 == family.size()) {
    Matrix composed = partial;
    for (int k = 0; k < remaining; ++k) composed = family[index].apply(composed);
    worst = std::max(worst, frob_dist(composed, original));
    return;
  }
  for (int take = 0; take <= remaining; ++take) {
    Matrix next = partial;
    for (int k = 0; k < take; ++k) next = family[index].apply(next);
    // Commuting members make the application order immaterial, and the
    // commuting check measures that separately.
    visit_compositions(family, index + 1, remaining - take, next, original,
                       worst);
  }
}

}  // namespace

HomogeneityReport check_homogeneous(std::span<const PeriodicOperator> family,
                                    int period, int dim, int trials,
                                    std::uint64_t seed, double tol) {
  if (family.empty()) {
    throw std::invalid_argument("check_homogeneous: family must be non-empty");
  }
  if (period < 1) {
    throw std::invalid_argument("check_homogeneous: period must be >= 1");
  }
  HomogeneityReport report;
  report.trials = trials;
  report.seed = seed;
  report.tol = tol;

  Rng rng = split_rng(seed, 1);
  for (int t = 0; t < trials; ++t) {
    const Matrix x = random_matrix(rng, dim, dim);
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        report.commuting_err =
            std::max(report.commuting_err,
                     frob_dist(family[i].apply(family[j].apply(x)),
                               family[j].apply(family[i].apply(x))));
      }
    }
    double worst = 0.0;
    visit_compositions(family, 0, period, x, x, worst);
    report.composition_err = std::max(report.composition_err, worst);
  }

  report.passed =
      report.commuting_err <= tol && report.composition_err <= tol;
  return report;
}

namespace {

/// The wrong-result probe for conjugation cancellation: K_n assembled
/// from real matrix units must reproduce K_n on a complex argument.
void assert_complex_linear(const MultiTermEquation& eq, const Matrix& coeff) {
  Rng rng = split_rng(0x70726f6265ULL, 2);  // fixed probe stream
  const Matrix x = random_matrix(rng, eq.dim(), eq.dim());
  const Matrix direct = term_iterate(eq, eq.period, x);
  const Matrix via_matrix = unvec(coeff * vec(x), eq.dim(), eq.dim());
  const double err = frob_dist(direct, via_matrix);
  if (!(err <= 1e-8 * (1.0 + frob_norm(direct)))) {
    std::ostringstream os;
    os.precision(6);
    os << "family is not homogeneous: the period-length composition is not "
          "complex-linear (conjugations do not cancel; probe deviation "
       << std::scientific << err << ")";
    throw HomogeneityError(os.str());
  }
}

}  // namespace

GeneralizedStein build_generalized_stein(const MultiTermEquation& eq) {
  const int m = eq.dim();
  GeneralizedStein out;
  out.coefficient = Matrix(m * m, m * m);
  // Column q*m + p of the coefficient is K_n applied to the matrix unit
  // E_{pq}, column-stacked.
  for (int q = 0; q < m; ++q) {
    for (int p = 0; p < m; ++p) {
      Matrix unit(m, m);
      unit(p, q) = Complex(1.0, 0.0);
      const Matrix image = term_iterate(eq, eq.period, unit);
      const int col = q * m + p;
      for (int jj = 0; jj < m; ++jj) {
        for (int ii = 0; ii < m; ++ii) {
          out.coefficient(jj * m + ii, col) = image(ii, jj);
        }
      }
    }
  }
  assert_complex_linear(eq, out.coefficient);

  out.constant = Matrix(m, m);
  Matrix acc = eq.c;
  out.constant += acc;
  for (int i = 1; i < eq.period; ++i) {
    acc = term_iterate(eq, 1, acc);
    out.constant += acc;
  }
  return out;
}

Matrix multiterm_orbit_average(const MultiTermEquation& eq, const Matrix& x) {
  Matrix acc = x;
  Matrix sum = x;
  for (int i = 1; i < eq.period; ++i) {
    acc = apply_rhs(eq, acc);
    sum += acc;
  }
  return sum / static_cast<double>(eq.period);
}

SolveReport solve_multiterm(const MultiTermEquation& eq, double tol) {
  std::vector<PeriodicOperator> family;
  family.reserve(eq.terms.size());
  for (const MultiTermEquation::Term& term : eq.terms) family.push_back(term.op);
  const HomogeneityReport homogeneity =
      check_homogeneous(family, eq.period, eq.dim(), 4, 0x686f6d6fULL, 1e-10);
  if (!homogeneity.passed) {
    std::ostringstream os;
    os.precision(6);
    os << "family is not homogeneous: commuting deviation " << std::scientific
       << homogeneity.commuting_err << ", composition deviation "
       << homogeneity.composition_err;
    throw HomogeneityError(os.str());
  }

  const GeneralizedStein gs = build_generalized_stein(eq);
  const int m = eq.dim();
  const Matrix coeff = Matrix::identity(m * m) - gs.coefficient;

  SolveReport report;
  report.method = SolveMethod::kDirect;
  report.solvability.spectrum_cal_a = eigenvalues(gs.coefficient);
  report.solvability.spectrum_cal_b = Spectrum{{Complex(1.0, 0.0)}};
  report.solvability.reciprocal_free = reciprocal_free(
      report.solvability.spectrum_cal_a, report.solvability.spectrum_cal_b);
  report.solvability.unique = report.solvability.reciprocal_free;
  report.solvability.rho = report.solvability.spectrum_cal_a.radius();
  report.solvability.rho_lt_one = report.solvability.rho < 1.0;
  report.solvability.notes.push_back(
      "generalized Stein system: the spectrum listed first is that of the "
      "period-length composition matrix, tested against the single point 1");
  report.rho = report.solvability.rho;

  try {
    report.stein_solution = unvec(solve_dense(coeff, vec(gs.constant)), m, m);
  } catch (const SingularMatrixError& e) {
    std::ostringstream os;
    os.precision(3);
    os << "generalized Stein linearization is singular (rcond = "
       << std::scientific << e.rcond()
       << "); using the minimum-norm least-squares solution";
    report.warnings.push_back(os.str());
    report.stein_solution =
        unvec(solve_least_squares(coeff, vec(gs.constant)), m, m);
  }

  report.stein_residual = frob_norm(report.stein_solution -
                                    term_iterate(eq, eq.period, report.stein_solution) -
                                    gs.constant);
  const double gate = tol * (1.0 + frob_norm(report.stein_solution));
  if (!(report.stein_residual <= gate)) {
    std::ostringstream os;
    os.precision(6);
    os << "no solution: the generalized Stein system is inconsistent "
          "(residual "
       << std::scientific << report.stein_residual << ")";
    throw UnsolvableError(os.str());
  }

  report.solution = multiterm_orbit_average(eq, report.stein_solution);
  report.eq_residual = frob_dist(report.solution, apply_rhs(eq, report.solution));
  return report;
}

}  // namespace pstein
