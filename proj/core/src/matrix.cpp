#include "pstein/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "pstein/errors.hpp"

namespace pstein {

namespace {

void require_positive(int rows, int cols) {
  if (rows < 0 || cols < 0) {
    throw DimensionError("matrix dimensions must be non-negative, got " +
                         std::to_string(rows) + " x " + std::to_string(cols));
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch, " +
                         std::to_string(a.rows()) + " x " + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + " x " +
                         std::to_string(b.cols()));
  }
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require_positive(rows, cols);
  entries_.assign(static_cast<std::size_t>(rows) * cols, Complex(0.0, 0.0));
}

Matrix::Matrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_positive(rows, cols);
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw DimensionError("entry count " + std::to_string(entries_.size()) +
                         " does not match " + std::to_string(rows) + " x " +
                         std::to_string(cols));
  }
  check_finite();
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  std::vector<Complex> entries;
  entries.reserve(static_cast<std::size_t>(r) * c);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw DimensionError("ragged initializer: row length " +
                           std::to_string(row.size()) + " != " + std::to_string(c));
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(entries));
}

Matrix Matrix::zero(int rows, int cols) { return Matrix(rows, cols); }

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Complex>& d) {
  const int n = static_cast<int>(d.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  m.check_finite();
  return m;
}

void Matrix::check_finite() const {
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("matrix entries must be finite");
    }
  }
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::conjugate() const {
  Matrix out = *this;
  for (Complex& z : out.entries_) z = std::conj(z);
  return out;
}

Matrix Matrix::adjoint() const { return transpose().conjugate(); }

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_shape(*this, rhs, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  check_finite();
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_shape(*this, rhs, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  check_finite();
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (Complex& z : entries_) z *= s;
  check_finite();
  return *this;
}

Matrix operator-(const Matrix& m) {
  Matrix out = m;
  for (Complex& z : out.entries_) z = -z;
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionError("operator*: inner dimensions differ, " +
                         std::to_string(lhs.cols()) + " vs " +
                         std::to_string(rhs.rows()));
  }
  Matrix out(lhs.rows(), rhs.cols());
  for (int i = 0; i < lhs.rows(); ++i) {
    for (int k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < rhs.cols(); ++j) {
        out(i, j) += a * rhs(k, j);
      }
    }
  }
  out.check_finite();
  return out;
}

double frob_norm(const Matrix& m) {
  double sum = 0.0;
  for (const Complex& z : m.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double max_abs(const Matrix& m) {
  double best = 0.0;
  for (const Complex& z : m.entries()) best = std::max(best, std::abs(z));
  return best;
}

double frob_dist(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("frob_dist: shape mismatch");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    sum += std::norm(a.entries()[k] - b.entries()[k]);
  }
  return std::sqrt(sum);
}

}  // namespace pstein
