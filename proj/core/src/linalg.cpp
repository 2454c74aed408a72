#include "pstein/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "pstein/errors.hpp"

namespace pstein {

namespace {

std::string format_scientific(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

Eigen::MatrixXcd to_eigen(const Matrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

Matrix from_eigen(const Eigen::MatrixXcd& m) {
  Matrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

void require_square(const Matrix& m, const char* who) {
  if (!m.is_square()) {
    throw DimensionError(std::string(who) + ": matrix must be square, got " +
                         std::to_string(m.rows()) + " x " + std::to_string(m.cols()));
  }
}

}  // namespace

double Spectrum::radius() const {
  double best = 0.0;
  for (const Complex& z : values) best = std::max(best, std::abs(z));
  return best;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const Complex s = a(i, j);
      if (s == Complex(0.0, 0.0)) continue;
      for (int p = 0; p < b.rows(); ++p) {
        for (int q = 0; q < b.cols(); ++q) {
          out(i * b.rows() + p, j * b.cols() + q) = s * b(p, q);
        }
      }
    }
  }
  return out;
}

Matrix vec(const Matrix& x) {
  Matrix out(x.rows() * x.cols(), 1);
  int k = 0;
  for (int j = 0; j < x.cols(); ++j) {
    for (int i = 0; i < x.rows(); ++i) {
      out(k++, 0) = x(i, j);
    }
  }
  return out;
}

Matrix unvec(const Matrix& v, int rows, int cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) {
    throw DimensionError("unvec: expected a " + std::to_string(rows * cols) +
                         " x 1 column, got " + std::to_string(v.rows()) + " x " +
                         std::to_string(v.cols()));
  }
  Matrix out(rows, cols);
  int k = 0;
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      out(i, j) = v(k++, 0);
    }
  }
  return out;
}

Spectrum eigenvalues(const Matrix& a) {
  require_square(a, "eigenvalues");
  if (a.rows() == 0) return Spectrum{};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a), false);
  if (solver.info() != Eigen::Success) {
    throw EigenDecompositionError("eigenvalue iteration did not converge for " +
                                  std::to_string(a.rows()) + " x " +
                                  std::to_string(a.cols()) + " matrix");
  }
  Spectrum s;
  s.values.reserve(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) s.values.push_back(solver.eigenvalues()(i));
  return s;
}

double spectral_radius(const Matrix& a) { return eigenvalues(a).radius(); }

namespace {

/// Eigen reports rcond as NaN for an exactly singular factorization
/// (0 * inf); treat that as 0, the limit it stands for.
double finite_rcond(double rcond) { return std::isfinite(rcond) ? rcond : 0.0; }

}  // namespace

double rcond_estimate(const Matrix& m) {
  require_square(m, "rcond_estimate");
  if (m.rows() == 0) return 1.0;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(to_eigen(m));
  return finite_rcond(lu.rcond());
}

Matrix solve_dense(const Matrix& m, const Matrix& rhs) {
  require_square(m, "solve_dense");
  if (m.rows() != rhs.rows()) {
    throw DimensionError("solve_dense: rhs has " + std::to_string(rhs.rows()) +
                         " rows, expected " + std::to_string(m.rows()));
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(to_eigen(m));
  const double rcond = finite_rcond(lu.rcond());
  if (!(rcond >= 1e-14)) {
    throw SingularMatrixError(
        "solve_dense: coefficient matrix is numerically singular (rcond = " +
            format_scientific(rcond) + ")",
        rcond);
  }
  return from_eigen(lu.solve(to_eigen(rhs)));
}

Matrix solve_least_squares(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) {
    throw DimensionError("solve_least_squares: rhs has " +
                         std::to_string(rhs.rows()) + " rows, expected " +
                         std::to_string(m.rows()));
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(to_eigen(m));
  return from_eigen(cod.solve(to_eigen(rhs)));
}

double spectrum_match_distance(const Spectrum& lhs, const Spectrum& rhs) {
  if (lhs.size() != rhs.size()) {
    return std::numeric_limits<double>::infinity();
  }
  std::vector<Complex> a = lhs.values;
  std::vector<Complex> b = rhs.values;
  double worst = 0.0;
  // Pair the globally closest values first so a single far-off value
  // cannot be hidden by stealing a nearer partner.
  while (!a.empty()) {
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const double d = std::abs(a[i] - b[j]);
        if (d < best) {
          best = d;
          best_i = i;
          best_j = j;
        }
      }
    }
    worst = std::max(worst, best);
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(best_i));
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(best_j));
  }
  return worst;
}

}  // namespace pstein
