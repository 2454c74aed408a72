#include "pstein/solvability.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "pstein/errors.hpp"
#include "pstein/operators.hpp"

namespace pstein {

bool reciprocal_free(const Spectrum& spec_a, const Spectrum& spec_b, double tol) {
  for (const Complex& lambda : spec_a.values) {
    for (const Complex& mu : spec_b.values) {
      const double closeness = std::abs(lambda * mu - Complex(1.0, 0.0));
      if (closeness <= tol * (1.0 + std::abs(lambda) * std::abs(mu))) {
        return false;
      }
    }
  }
  return true;
}

SolvabilityReport check_unique(const SteinSystem& sys, double tol) {
  SolvabilityReport report;
  report.spectrum_cal_a = eigenvalues(sys.cal_a);
  report.spectrum_cal_b = eigenvalues(sys.cal_b);
  report.reciprocal_free =
      reciprocal_free(report.spectrum_cal_a, report.spectrum_cal_b, tol);
  report.rho = report.spectrum_cal_a.radius() * report.spectrum_cal_b.radius();
  report.rho_lt_one = report.rho < 1.0;
  report.unique = report.reciprocal_free;

  std::ostringstream rho_note;
  rho_note.precision(6);
  rho_note << std::scientific << "rho(calA) * rho(calB) = " << report.rho;
  report.notes.push_back(rho_note.str());
  if (report.reciprocal_free) {
    report.notes.push_back(
        "spectra are reciprocal free: the Stein equation has exactly one "
        "solution (sufficient condition)");
  } else {
    report.notes.push_back(
        "an eigenvalue product falls on 1 within tolerance: the linearization "
        "is singular or nearly so");
  }
  if (report.rho_lt_one) {
    report.notes.push_back(
        "rho < 1: fixed-point iterations converge from any starting point");
  } else {
    report.notes.push_back(
        "rho >= 1: fixed-point iterations are not guaranteed to converge");
  }
  return report;
}

Matrix anti_transpose_vec_permutation(int m) {
  if (m < 1) {
    throw DimensionError("anti_transpose_vec_permutation: size must be >= 1");
  }
  // antitranspose(X)(i, j) = X(m-1-j, m-1-i); in column-stacked indexing
  // entry (r, c) lives at c*m + r.
  Matrix perm(m * m, m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      perm(j * m + i, (m - 1 - i) * m + (m - 1 - j)) = Complex(1.0, 0.0);
    }
  }
  return perm;
}

Matrix anti_transpose_linearization(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionError(
        "anti_transpose_linearization: A and B must be square and of one size");
  }
  return kron(b.transpose(), a) * anti_transpose_vec_permutation(a.rows());
}

Spectrum anti_transpose_spectrum_prediction(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionError(
        "anti_transpose_spectrum_prediction: A and B must be square and of one "
        "size");
  }
  const PeriodicOperator anti = anti_transpose_op();
  const Spectrum base = eigenvalues(a * anti.apply(b));
  Spectrum predicted;
  predicted.values.reserve(
      static_cast<std::size_t>(base.size()) * base.size());
  for (int i = 0; i < base.size(); ++i) {
    predicted.values.push_back(base.values[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < base.size(); ++i) {
    for (int j = i + 1; j < base.size(); ++j) {
      const Complex root = std::sqrt(base.values[static_cast<std::size_t>(i)] *
                                     base.values[static_cast<std::size_t>(j)]);
      predicted.values.push_back(root);
      predicted.values.push_back(-root);
    }
  }
  return predicted;
}

AntiTransposeUniqueReport anti_transpose_unique(const Matrix& a, const Matrix& b,
                                                double tol) {
  AntiTransposeUniqueReport report;
  const PeriodicOperator anti = anti_transpose_op();
  report.spectrum_afb = eigenvalues(a * anti.apply(b));

  Spectrum rest;
  for (const Complex& lambda : report.spectrum_afb.values) {
    if (std::abs(lambda + Complex(1.0, 0.0)) <= tol) {
      ++report.minus_one_multiplicity;
    } else {
      rest.values.push_back(lambda);
    }
  }
  report.rest_reciprocal_free = reciprocal_free(rest, rest, tol);
  report.unique =
      report.rest_reciprocal_free && report.minus_one_multiplicity <= 1;

  report.notes.push_back("-1 appears with multiplicity " +
                         std::to_string(report.minus_one_multiplicity));
  report.notes.push_back(report.rest_reciprocal_free
                             ? "spectrum away from -1 is reciprocal free"
                             : "spectrum away from -1 contains values whose "
                               "product falls on 1");
  report.notes.push_back(
      report.unique
          ? "equation is uniquely solvable (condition is necessary and "
            "sufficient for the anti-transpose)"
          : "equation is not uniquely solvable");
  return report;
}

}  // namespace pstein
