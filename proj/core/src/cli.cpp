#include "pstein/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <functional>
#include <sstream>
#include <utility>

#include "pstein/equation_io.hpp"
#include "pstein/errors.hpp"
#include "pstein/linalg.hpp"
#include "pstein/multiterm.hpp"
#include "pstein/random.hpp"
#include "pstein/recovery.hpp"
#include "pstein/solvability.hpp"
#include "pstein/stein_transform.hpp"

namespace pstein::cli {

namespace {

using nlohmann::ordered_json;

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

ordered_json complex_json(const Complex& z) {
  return ordered_json::array({z.real(), z.imag()});
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json spectrum_json(const Spectrum& s) {
  ordered_json values = ordered_json::array();
  for (const Complex& z : s.values) values.push_back(complex_json(z));
  return values;
}

ordered_json solvability_json(const SolvabilityReport& r) {
  ordered_json node;
  node["spectrum_cal_a"] = spectrum_json(r.spectrum_cal_a);
  node["spectrum_cal_b"] = spectrum_json(r.spectrum_cal_b);
  node["reciprocal_free"] = r.reciprocal_free;
  node["unique"] = r.unique;
  node["rho"] = r.rho;
  node["rho_lt_one"] = r.rho_lt_one;
  node["notes"] = r.notes;
  return node;
}

ordered_json solve_report_json(const SolveReport& r) {
  ordered_json node;
  node["method"] = to_string(r.method);
  node["iterations"] = r.iterations;
  node["rho"] = r.rho;
  node["stein_residual"] = r.stein_residual;
  node["eq_residual"] = r.eq_residual;
  node["solution"] = matrix_json(r.solution);
  node["stein_solution"] = matrix_json(r.stein_solution);
  node["solvability"] = solvability_json(r.solvability);
  node["warnings"] = r.warnings;
  return node;
}

ordered_json anti_transpose_json(const AntiTransposeUniqueReport& r) {
  ordered_json node;
  node["spectrum_afb"] = spectrum_json(r.spectrum_afb);
  node["minus_one_multiplicity"] = r.minus_one_multiplicity;
  node["rest_reciprocal_free"] = r.rest_reciprocal_free;
  node["unique"] = r.unique;
  node["notes"] = r.notes;
  return node;
}

void write_error(std::ostream& err, const std::string& category,
                 const std::string& type, const std::string& message,
                 const std::vector<std::string>* issues = nullptr) {
  ordered_json envelope;
  envelope["error"]["category"] = category;
  envelope["error"]["type"] = type;
  envelope["error"]["message"] = message;
  if (issues) envelope["error"]["issues"] = *issues;
  err << envelope.dump(2) << "\n";
}

/// Run a subcommand body, turning exceptions into the JSON error envelope
/// and the shared exit-code scheme.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const SchemaError& e) {
    const std::vector<std::string>& issues = e.issues();
    write_error(err, "schema", "SchemaError", e.what(), &issues);
    return kExitError;
  } catch (const UnsolvableError& e) {
    write_error(err, "math", "UnsolvableError", e.what());
    return kExitMath;
  } catch (const DivergenceError& e) {
    write_error(err, "math", "DivergenceError", e.what());
    return kExitMath;
  } catch (const NotASteinSolutionError& e) {
    write_error(err, "math", "NotASteinSolutionError", e.what());
    return kExitMath;
  } catch (const HomogeneityError& e) {
    write_error(err, "math", "HomogeneityError", e.what());
    return kExitMath;
  } catch (const std::exception& e) {
    write_error(err, "internal", "error", e.what());
    return kExitError;
  }
}

/// Narrated, JSON-recorded assertion list backing the demo subcommand.
class Transcript {
 public:
  Transcript(const std::string& demo, std::uint64_t seed, std::ostream& err)
      : err_(err) {
    root_["demo"] = demo;
    root_["seed"] = seed;
    root_["quantities"] = ordered_json::object();
    root_["checks"] = ordered_json::array();
  }

  void narrate(const std::string& line) { err_ << line << "\n"; }

  void quantity(const std::string& key, ordered_json value) {
    root_["quantities"][key] = std::move(value);
  }

  void check(const std::string& name, double deviation, double tol) {
    const bool ok = deviation <= tol;
    all_passed_ = all_passed_ && ok;
    root_["checks"].push_back({{"name", name},
                               {"deviation", deviation},
                               {"tol", tol},
                               {"passed", ok}});
    err_ << "  [" << (ok ? "pass" : "FAIL") << "] " << name << ": deviation "
         << sci(deviation) << " (tol " << sci(tol) << ")\n";
  }

  void check_true(const std::string& name, bool ok) {
    all_passed_ = all_passed_ && ok;
    root_["checks"].push_back({{"name", name}, {"passed", ok}});
    err_ << "  [" << (ok ? "pass" : "FAIL") << "] " << name << "\n";
  }

  int finish(std::ostream& out) {
    root_["passed"] = all_passed_;
    out << root_.dump(2) << "\n";
    err_ << (all_passed_ ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return all_passed_ ? kExitOk : kExitMath;
  }

 private:
  ordered_json root_;
  std::ostream& err_;
  bool all_passed_ = true;
};

Matrix random_scaled(Rng& rng, int dim, double target_frob) {
  Matrix r = random_matrix(rng, dim, dim);
  return r * (target_frob / frob_norm(r));
}

// A scalar equation whose associated linear system has infinitely many
// solutions while the equation itself has exactly one. Every solution of
// the linear system is averaged onto the same recovered matrix.
int demo_averaging(std::uint64_t seed, std::ostream& out, std::ostream& err) {
  Transcript t("averaging", seed, err);
  t.narrate("averaging: scalar equation x = -x + 2 posed with the identity");
  t.narrate("operator at declared period 2");

  const Matrix a = Matrix::from_rows({{-1.0}});
  const Matrix b = Matrix::from_rows({{1.0}});
  const Matrix c = Matrix::from_rows({{2.0}});
  const LinearMatrixEquation eq(a, b, c, identity_op(2));

  const SteinSystem sys = build_stein(eq);
  t.quantity("cal_a", matrix_json(sys.cal_a));
  t.quantity("cal_b", matrix_json(sys.cal_b));
  t.quantity("cal_c", matrix_json(sys.cal_c));
  t.narrate("associated system: X = X + 0, so every scalar solves it");
  t.check("cal_a equals 1", std::abs(sys.cal_a(0, 0) - 1.0), 0.0);
  t.check("cal_b equals 1", std::abs(sys.cal_b(0, 0) - 1.0), 0.0);
  t.check("cal_c equals 0", std::abs(sys.cal_c(0, 0)), 0.0);

  bool singular = false;
  try {
    (void)solve_direct(sys);
  } catch (const SingularMatrixError&) {
    singular = true;
  }
  t.check_true("direct linearization is singular", singular);

  const SolveReport report = solve(eq);
  t.quantity("solution", matrix_json(report.solution));
  t.quantity("warnings", ordered_json(report.warnings));
  t.check_true("pipeline fell back with a warning", !report.warnings.empty());
  t.check_true("reciprocal-free test fails as expected",
               !report.solvability.reciprocal_free);
  t.check("pipeline solution equals 1 exactly",
          std::abs(report.solution(0, 0) - 1.0), 0.0);
  t.check("equation residual", report.eq_residual, 0.0);

  t.narrate("averaging any solution of the linear system yields the same");
  t.narrate("matrix: the one solution of the original equation");
  for (double x : {0.0, 7.0, -3.0}) {
    const Matrix recovered = recover(eq, Matrix::from_rows({{x}}));
    t.check("recover from X = " + sci(x) + " gives 1 exactly",
            std::abs(recovered(0, 0) - 1.0), 0.0);
  }
  return t.finish(out);
}

// Permutation similarity f(X) = P^T X P: the associated coefficients have
// the closed forms (A P^T)^n and (P B)^n, checked against the general
// construction, and the iterative solvers agree with the direct one.
int demo_perm_similarity(std::uint64_t seed, std::ostream& out,
                         std::ostream& err) {
  Transcript t("perm-similarity", seed, err);
  const int m = 4;
  Rng rng = split_rng(seed, 10);
  const Matrix p = primary_permutation(m);
  const Matrix a = random_scaled(rng, m, 0.5);
  const Matrix b = random_scaled(rng, m, 0.5);
  const Matrix c = random_matrix(rng, m, m);
  const LinearMatrixEquation eq(a, b, c, perm_similarity_op(p));
  t.narrate("perm-similarity: f(X) = P^T X P for the cyclic shift P of size " +
            std::to_string(m) + ", period " + std::to_string(eq.period()));

  const SteinSystem sys = build_stein(eq);
  const Matrix ap = a * p.transpose();
  const Matrix pb = p * b;
  const Matrix ap4 = ap * ap * ap * ap;
  const Matrix pb4 = pb * pb * pb * pb;
  t.check("cal_a matches the closed form (A P^T)^4", frob_dist(sys.cal_a, ap4),
          1e-12);
  t.check("cal_b matches the closed form (P B)^4", frob_dist(sys.cal_b, pb4),
          1e-12);

  Rng probe_rng = split_rng(seed, 11);
  const Matrix x0 = random_matrix(probe_rng, m, m);
  const Matrix lhs = iterate_rhs(eq, eq.period(), x0);
  const Matrix rhs = sys.cal_a * x0 * sys.cal_b + sys.cal_c;
  t.check("composing the equation map period-many times lands on the system",
          frob_dist(lhs, rhs), 1e-12);
  t.check("product form of the homogeneous iterates matches the recursion",
          frob_dist(product_iterate(eq, 3, x0), homogeneous_iterate(eq, 3, x0)),
          1e-12);

  SolverConfig direct_cfg;
  const SolveReport direct = solve(eq, direct_cfg);
  SolverConfig smith_cfg;
  smith_cfg.method = SolveMethod::kSmith;
  const SolveReport smith = solve(eq, smith_cfg);
  t.quantity("rho", ordered_json(direct.rho));
  t.quantity("smith_iterations", ordered_json(smith.iterations));
  t.check_true("contraction factor is below one", direct.rho < 1.0);
  t.check("direct and fixed-point solutions agree",
          frob_dist(direct.solution, smith.solution),
          1e-10 * (1.0 + frob_norm(direct.solution)));
  t.check("equation residual of the direct solution", direct.eq_residual,
          1e-10 * (1.0 + frob_norm(direct.solution)));

  const Matrix via_orbit = recover(eq, direct.stein_solution);
  const Matrix via_explicit = recover_explicit(eq, direct.stein_solution);
  const Matrix via_weighted = recover_weighted(eq, direct.stein_solution);
  t.check("explicit recovery form agrees with the orbit average",
          frob_dist(via_orbit, via_explicit), 1e-12);
  t.check("weighted recovery form agrees with the orbit average",
          frob_dist(via_orbit, via_weighted), 1e-12);
  const IdempotenceReport idem = idempotence_check(eq, direct.solution);
  t.check("averaging is idempotent on the solution", idem.deviation, idem.tol);
  return t.finish(out);
}

// The anti-transpose linearization has a spectrum computable from the m
// eigenvalues of A * antitranspose(B) alone; its uniqueness test is exact,
// unlike the reciprocal-free test on the associated system.
int demo_anti_transpose(std::uint64_t seed, std::ostream& out,
                        std::ostream& err) {
  Transcript t("anti-transpose", seed, err);
  const int m = 4;
  const PeriodicOperator anti = anti_transpose_op();
  Rng rng = split_rng(seed, 20);

  t.narrate("anti-transpose: spectrum of the m^2 linearization predicted");
  t.narrate("from the m eigenvalues of A * antitranspose(B)");
  const Matrix a = random_scaled(rng, m, 0.5);
  const Matrix b = random_scaled(rng, m, 0.5);
  const Spectrum predicted = anti_transpose_spectrum_prediction(a, b);
  const Spectrum computed = eigenvalues(anti_transpose_linearization(a, b));
  t.quantity("predicted", spectrum_json(predicted));
  t.quantity("computed", spectrum_json(computed));
  t.check("predicted spectrum matches the computed one",
          spectrum_match_distance(predicted, computed), 1e-8);

  const AntiTransposeUniqueReport generic = anti_transpose_unique(a, b);
  const Matrix lin = anti_transpose_linearization(a, b);
  const Matrix shifted = Matrix::identity(m * m) - lin;
  const double generic_rcond = rcond_estimate(shifted);
  t.check_true("generic instance: test says unique", generic.unique);
  t.check_true("generic instance: brute-force linearization is nonsingular",
               generic_rcond > 1e-10);

  const Matrix c = random_matrix(rng, m, m);
  const LinearMatrixEquation eq(a, b, c, anti);
  const SolveReport report = solve(eq);
  t.check("solving the generic instance leaves a small residual",
          report.eq_residual, 1e-10 * (1.0 + frob_norm(report.solution)));

  // Plant a spectrum: with antitranspose(B) = A^{-1} M the product
  // A * antitranspose(B) is exactly M, so its eigenvalues are chosen
  // freely. The anti-transpose is an involution, so B = antitranspose(A^{-1} M).
  const Matrix well = Matrix::identity(m) + random_scaled(rng, m, 0.4);
  const auto planted_b = [&](const Matrix& eigs) {
    return anti.apply(solve_dense(well, eigs));
  };

  t.narrate("planted instance with a simple eigenvalue -1: the exact test");
  t.narrate("certifies uniqueness where the reciprocal-free test cannot");
  const Matrix simple = Matrix::diagonal({-1.0, 0.3, 0.5, 0.7});
  const Matrix b_simple = planted_b(simple);
  const AntiTransposeUniqueReport rep_simple = anti_transpose_unique(well, b_simple);
  const double rcond_simple = rcond_estimate(
      Matrix::identity(m * m) - anti_transpose_linearization(well, b_simple));
  const SolvabilityReport stein_simple =
      check_unique(build_stein(LinearMatrixEquation(well, b_simple, c, anti)));
  t.check_true("simple -1: exact test says unique", rep_simple.unique);
  t.check_true("simple -1: multiplicity is one",
               rep_simple.minus_one_multiplicity == 1);
  t.check_true("simple -1: brute-force linearization is nonsingular",
               rcond_simple > 1e-8);
  t.check_true("simple -1: reciprocal-free test is too coarse here",
               !stein_simple.reciprocal_free);

  t.narrate("planted instance with a double eigenvalue -1: uniqueness fails");
  const Matrix twice = Matrix::diagonal({-1.0, -1.0, 0.3, 0.5});
  const Matrix b_twice = planted_b(twice);
  const AntiTransposeUniqueReport rep_twice = anti_transpose_unique(well, b_twice);
  const double rcond_twice = rcond_estimate(
      Matrix::identity(m * m) - anti_transpose_linearization(well, b_twice));
  t.quantity("rcond_double_minus_one", ordered_json(rcond_twice));
  t.check_true("double -1: exact test says not unique", !rep_twice.unique);
  t.check_true("double -1: multiplicity is two",
               rep_twice.minus_one_multiplicity == 2);
  t.check_true("double -1: brute-force linearization is singular",
               rcond_twice < 1e-10);
  return t.finish(out);
}

// Several coefficient pairs sharing one homogeneous operator family: the
// generalized construction, its tuple expansion, and the reduction to the
// single-operator pipeline when only one term is present.
int demo_multiterm(std::uint64_t seed, std::ostream& out, std::ostream& err) {
  Transcript t("multiterm", seed, err);
  const int m = 3;
  Rng rng = split_rng(seed, 30);
  const Matrix a1 = random_scaled(rng, m, 0.5);
  const Matrix b1 = random_scaled(rng, m, 0.5);
  const Matrix a2 = random_scaled(rng, m, 0.5);
  const Matrix b2 = random_scaled(rng, m, 0.5);
  const Matrix c = random_matrix(rng, m, m);
  t.narrate("multiterm: X = A1 conj(X) B1 + A2 conj(X) B2 + C, period 2");

  const MultiTermEquation eq({{a1, b1, conjugate_op()}, {a2, b2, conjugate_op()}},
                             c, 2);
  const std::vector<PeriodicOperator> family = {conjugate_op(), conjugate_op()};
  const HomogeneityReport hom = check_homogeneous(family, eq.period, m, 6, seed);
  t.check_true("family is homogeneous (commuting, compositions cancel)",
               hom.passed);

  Rng probe_rng = split_rng(seed, 31);
  const Matrix x0 = random_matrix(probe_rng, m, m);
  Matrix tuple = Matrix::zero(m, m);
  for (const MultiTermEquation::Term& outer : eq.terms) {
    for (const MultiTermEquation::Term& inner : eq.terms) {
      tuple += outer.a * inner.a.conjugate() * x0 * inner.b.conjugate() * outer.b;
    }
  }
  t.check("two-fold homogeneous iterate expands into the tuple sum",
          frob_dist(term_iterate(eq, 2, x0), tuple), 1e-12);

  const SolveReport report = solve_multiterm(eq);
  t.quantity("rho", ordered_json(report.rho));
  t.check("generalized system residual", report.stein_residual,
          1e-10 * (1.0 + frob_norm(report.stein_solution)));
  t.check("equation residual", report.eq_residual,
          1e-10 * (1.0 + frob_norm(report.solution)));
  const Matrix averaged = multiterm_orbit_average(eq, report.solution);
  t.check("averaging is idempotent on the solution",
          frob_dist(averaged, report.solution),
          1e-10 * (1.0 + frob_norm(report.solution)));

  t.narrate("a one-term document reduces to the single-operator pipeline");
  const MultiTermEquation one({{a1, b1, conjugate_op()}}, c, 2);
  const LinearMatrixEquation single(a1, b1, c, conjugate_op());
  const SolveReport via_multi = solve_multiterm(one);
  const SolveReport via_single = solve(single);
  t.check("one-term solution matches the single-operator solution",
          frob_dist(via_multi.solution, via_single.solution),
          1e-10 * (1.0 + frob_norm(via_single.solution)));
  return t.finish(out);
}

}  // namespace

int run_solve(const std::string& document_text, const SolveOverrides& overrides,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const EquationDocument doc = parse_equation(document_text);
    SolverConfig cfg = doc.solver.value_or(SolverConfig{});
    if (overrides.method) cfg.method = *overrides.method;
    if (overrides.tol) cfg.tol = *overrides.tol;
    if (overrides.max_iter) cfg.max_iter = *overrides.max_iter;
    if (overrides.ell) cfg.ell = *overrides.ell;
    if (overrides.r) cfg.r = *overrides.r;

    SolveReport report;
    if (doc.kind == EquationDocument::Kind::kSingle) {
      report = solve(to_equation(doc), cfg);
    } else {
      if (cfg.method != SolveMethod::kDirect) {
        err << "warning: multiterm documents are solved directly; method "
            << to_string(cfg.method) << " ignored\n";
      }
      // The only tolerance with meaning here is the consistency gate, so
      // --tol sets it; the solver block's stop tolerance does not apply.
      report = solve_multiterm(to_multiterm(doc),
                               overrides.tol ? *overrides.tol : 1e-8);
    }
    for (const std::string& w : report.warnings) {
      err << "warning: " << w << "\n";
    }
    out << solve_report_json(report).dump(2) << "\n";
    return kExitOk;
  });
}

int run_check(const std::string& document_text, std::uint64_t seed,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const EquationDocument doc = parse_equation(document_text);
    ordered_json root;
    bool passed = true;
    bool unique = true;

    if (doc.kind == EquationDocument::Kind::kSingle) {
      const LinearMatrixEquation eq = to_equation(doc);
      const OperatorCheckReport op_check =
          check_operator(eq.op, eq.dim(), 8, seed);
      root["kind"] = "single";
      root["operator"] = {
          {"name", eq.op.name()},
          {"period", eq.op.period()},
          {"order", eq.op.order_preserving() ? "preserving" : "reversing"},
          {"check",
           {{"additivity_err", op_check.additivity_err},
            {"multiplicativity_err", op_check.multiplicativity_err},
            {"periodicity_err", op_check.periodicity_err},
            {"trials", op_check.trials},
            {"seed", op_check.seed},
            {"tol", op_check.tol},
            {"passed", op_check.passed}}}};
      passed = op_check.passed;

      const SolvabilityReport solvability = check_unique(build_stein(eq));
      root["solvability"] = solvability_json(solvability);
      unique = solvability.unique;

      if (eq.op.name() == "anti_transpose") {
        const AntiTransposeUniqueReport anti = anti_transpose_unique(eq.a, eq.b);
        root["anti_transpose"] = anti_transpose_json(anti);
        // For this operator the small-spectrum test is exact, so it
        // overrides the merely sufficient reciprocal-free verdict.
        unique = anti.unique;
      }
    } else {
      const MultiTermEquation eq = to_multiterm(doc);
      std::vector<PeriodicOperator> family;
      family.reserve(eq.terms.size());
      for (const MultiTermEquation::Term& term : eq.terms) family.push_back(term.op);
      const HomogeneityReport hom =
          check_homogeneous(family, eq.period, eq.dim(), 8, seed);
      root["kind"] = "multiterm";
      root["homogeneity"] = {{"commuting_err", hom.commuting_err},
                             {"composition_err", hom.composition_err},
                             {"trials", hom.trials},
                             {"seed", hom.seed},
                             {"tol", hom.tol},
                             {"passed", hom.passed}};
      passed = hom.passed;
      if (hom.passed) {
        const GeneralizedStein gs = build_generalized_stein(eq);
        const Spectrum spec = eigenvalues(gs.coefficient);
        const Spectrum one{{Complex(1.0, 0.0)}};
        unique = reciprocal_free(spec, one);
        ordered_json block;
        block["spectrum_coefficient"] = spectrum_json(spec);
        block["unique"] = unique;
        block["rho"] = spec.radius();
        block["rho_lt_one"] = spec.radius() < 1.0;
        block["identity_minus_coefficient_rcond"] = rcond_estimate(
            Matrix::identity(gs.coefficient.rows()) - gs.coefficient);
        root["solvability"] = std::move(block);
      } else {
        unique = false;
        root["solvability"] = nullptr;
      }
    }

    root["passed"] = passed;
    root["unique"] = unique;
    out << root.dump(2) << "\n";
    return (passed && unique) ? kExitOk : kExitMath;
  });
}

int run_spectrum(const std::string& document_text, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&]() -> int {
    const EquationDocument doc = parse_equation(document_text);
    ordered_json root;
    if (doc.kind == EquationDocument::Kind::kSingle) {
      const LinearMatrixEquation eq = to_equation(doc);
      const SteinSystem sys = build_stein(eq);
      const Spectrum spec_a = eigenvalues(sys.cal_a);
      const Spectrum spec_b = eigenvalues(sys.cal_b);
      root["kind"] = "single";
      root["spectrum_a"] = spectrum_json(eigenvalues(eq.a));
      root["spectrum_b"] = spectrum_json(eigenvalues(eq.b));
      root["spectrum_cal_a"] = spectrum_json(spec_a);
      root["spectrum_cal_b"] = spectrum_json(spec_b);
      const double rho = spec_a.radius() * spec_b.radius();
      root["rho"] = rho;
      root["rho_lt_one"] = rho < 1.0;
      if (eq.op.name() == "anti_transpose") {
        const Spectrum predicted = anti_transpose_spectrum_prediction(eq.a, eq.b);
        const Spectrum computed =
            eigenvalues(anti_transpose_linearization(eq.a, eq.b));
        ordered_json block;
        block["predicted"] = spectrum_json(predicted);
        block["computed"] = spectrum_json(computed);
        block["match_distance"] = spectrum_match_distance(predicted, computed);
        root["anti_transpose"] = std::move(block);
      }
    } else {
      const MultiTermEquation eq = to_multiterm(doc);
      const GeneralizedStein gs = build_generalized_stein(eq);
      const Spectrum spec = eigenvalues(gs.coefficient);
      root["kind"] = "multiterm";
      root["spectrum_coefficient"] = spectrum_json(spec);
      root["rho"] = spec.radius();
      root["rho_lt_one"] = spec.radius() < 1.0;
      root["identity_minus_coefficient_rcond"] = rcond_estimate(
          Matrix::identity(gs.coefficient.rows()) - gs.coefficient);
    }
    out << root.dump(2) << "\n";
    return kExitOk;
  });
}

std::vector<std::string> demo_names() {
  return {"averaging", "perm-similarity", "anti-transpose", "multiterm"};
}

int run_demo(const std::string& name, std::uint64_t seed, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (name == "averaging") return demo_averaging(seed, out, err);
    if (name == "perm-similarity") return demo_perm_similarity(seed, out, err);
    if (name == "anti-transpose") return demo_anti_transpose(seed, out, err);
    if (name == "multiterm") return demo_multiterm(seed, out, err);
    std::string known;
    for (const std::string& d : demo_names()) {
      known += known.empty() ? d : ", " + d;
    }
    throw SchemaError("unknown demo '" + name + "'",
                      {"$: expected one of " + known});
  });
}

}  // namespace pstein::cli
