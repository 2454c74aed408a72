#ifndef PSTEIN_MATRIX_HPP
#define PSTEIN_MATRIX_HPP

#include <cassert>
#include <complex>
#include <initializer_list>
#include <vector>

namespace pstein {

using Complex = std::complex<double>;

/// Dense complex matrix with value semantics and row-major storage.
///
/// Every constructor rejects non-finite entries, so a Matrix in hand is
/// always made of finite numbers; overflow guards therefore live in the
/// algorithms, not in the callers.
class Matrix {
 public:
  /// Empty 0 x 0 matrix.
  Matrix() = default;

  /// rows x cols zero matrix.
  Matrix(int rows, int cols);

  /// rows x cols matrix from row-major entries. Throws DimensionError if
  /// the entry count does not match, std::invalid_argument on NaN/Inf.
  Matrix(int rows, int cols, std::vector<Complex> entries);

  /// Build from nested braces, row by row.
  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix zero(int rows, int cols);
  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<Complex>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Complex& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  /// Row-major entry storage.
  const std::vector<Complex>& entries() const { return entries_; }

  Matrix transpose() const;
  Matrix conjugate() const;
  /// Conjugate transpose.
  Matrix adjoint() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(Complex s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator-(const Matrix& m);
  friend Matrix operator*(Matrix m, Complex s) { return m *= s; }
  friend Matrix operator*(Complex s, Matrix m) { return m *= s; }
  friend Matrix operator*(Matrix m, double s) { return m *= Complex(s, 0.0); }
  friend Matrix operator*(double s, Matrix m) { return m *= Complex(s, 0.0); }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator/(Matrix m, double s) { return m *= Complex(1.0 / s, 0.0); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check_finite() const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> entries_;
};

/// Frobenius norm.
double frob_norm(const Matrix& m);

/// Largest absolute entry, a cheap overflow sentinel for iterations.
double max_abs(const Matrix& m);

/// Entry-wise distance in Frobenius norm, ||a - b||_F.
double frob_dist(const Matrix& a, const Matrix& b);

}  // namespace pstein

#endif  // PSTEIN_MATRIX_HPP
