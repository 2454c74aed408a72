#include "pstein/stein_transform.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "pstein/errors.hpp"

namespace pstein {

namespace {

/// f^(0)(m) .. f^(n-1)(m) for the equation's operator. Exponents beyond
/// the table wrap around modulo the period.
std::vector<Matrix> power_table(const PeriodicOperator& op, const Matrix& m) {
  std::vector<Matrix> t;
  t.reserve(static_cast<std::size_t>(op.period()));
  t.push_back(m);
  for (int i = 1; i < op.period(); ++i) t.push_back(op.apply(t.back()));
  return t;
}

}  // namespace

LinearMatrixEquation::LinearMatrixEquation(Matrix a_, Matrix b_, Matrix c_,
                                           PeriodicOperator op_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), op(std::move(op_)) {
  if (!a.is_square() || !b.is_square() || !c.is_square() ||
      a.rows() != b.rows() || a.rows() != c.rows()) {
    throw DimensionError(
        "equation coefficients must be square and of one size, got A " +
        std::to_string(a.rows()) + " x " + std::to_string(a.cols()) + ", B " +
        std::to_string(b.rows()) + " x " + std::to_string(b.cols()) + ", C " +
        std::to_string(c.rows()) + " x " + std::to_string(c.cols()));
  }
  if (a.rows() == 0) {
    throw DimensionError("equation coefficients must be at least 1 x 1");
  }
  if (op.fixed_dim() && *op.fixed_dim() != a.rows()) {
    throw DimensionError("operator '" + op.name() + "' is fixed to size " +
                         std::to_string(*op.fixed_dim()) +
                         " but the equation has size " + std::to_string(a.rows()));
  }
}

Matrix apply_rhs(const LinearMatrixEquation& eq, const Matrix& x) {
  if (x.rows() != eq.dim() || x.cols() != eq.dim()) {
    throw DimensionError("apply_rhs: X must be " + std::to_string(eq.dim()) +
                         " x " + std::to_string(eq.dim()) + ", got " +
                         std::to_string(x.rows()) + " x " + std::to_string(x.cols()));
  }
  return eq.a * eq.op.apply(x) * eq.b + eq.c;
}

Matrix iterate_rhs(const LinearMatrixEquation& eq, int i, const Matrix& x) {
  if (i < 0) throw std::invalid_argument("iterate_rhs: i must be >= 0");
  Matrix out = x;
  for (int k = 0; k < i; ++k) out = apply_rhs(eq, out);
  return out;
}

Matrix homogeneous_iterate(const LinearMatrixEquation& eq, int i, const Matrix& x) {
  if (i < 0) throw std::invalid_argument("homogeneous_iterate: i must be >= 0");
  Matrix out = x;
  for (int k = 0; k < i; ++k) out = eq.a * eq.op.apply(out) * eq.b;
  return out;
}

Matrix product_iterate(const LinearMatrixEquation& eq, int i, const Matrix& x) {
  if (i < 0) throw std::invalid_argument("product_iterate: i must be >= 0");
  if (!eq.op.order_preserving()) {
    throw UnsupportedOperatorError(
        "product_iterate: the straight product form only exists for "
        "order-preserving operators; operator '" +
        eq.op.name() + "' is order-reversing");
  }
  const int n = eq.period();
  const std::vector<Matrix> fa = power_table(eq.op, eq.a);
  const std::vector<Matrix> fb = power_table(eq.op, eq.b);
  Matrix left = Matrix::identity(eq.dim());
  Matrix right = Matrix::identity(eq.dim());
  for (int j = 0; j < i; ++j) {
    left = left * fa[static_cast<std::size_t>(j % n)];
    right = fb[static_cast<std::size_t>(j % n)] * right;
  }
  return left * eq.op.apply_power(i % n, x) * right;
}

SteinSystem build_stein(const LinearMatrixEquation& eq) {
  const int n = eq.period();
  const std::vector<Matrix> fa = power_table(eq.op, eq.a);
  const std::vector<Matrix> fb = power_table(eq.op, eq.b);
  const std::vector<Matrix> fc = power_table(eq.op, eq.c);
  const Matrix id = Matrix::identity(eq.dim());

  SteinSystem sys{id, id, Matrix(eq.dim(), eq.dim())};

  if (eq.op.order_preserving()) {
    // calA collects the A-powers in increasing order, calB the B-powers
    // in decreasing order; the constant accumulates the partial products.
    Matrix left = id;
    Matrix right = id;
    Matrix total(eq.dim(), eq.dim());
    for (int i = 0; i < n; ++i) {
      total += left * fc[static_cast<std::size_t>(i)] * right;
      left = left * fa[static_cast<std::size_t>(i)];
      right = fb[static_cast<std::size_t>(i)] * right;
    }
    sys.cal_a = left;
    sys.cal_b = right;
    sys.cal_c = total;
    return sys;
  }

  // Order-reversing: each application flips sides, so the closed forms
  // interleave A- and B-factors two steps at a time.
  Matrix left = id;
  Matrix right = id;
  Matrix total(eq.dim(), eq.dim());
  for (int i = 0; i + 1 < n; i += 2) {
    const std::size_t e = static_cast<std::size_t>(i);
    total += left * (fc[e] + fa[e] * fc[e + 1] * fb[e]) * right;
    left = left * fa[e] * fb[e + 1];
    right = fa[e + 1] * fb[e] * right;
  }
  if (n % 2 == 0) {
    sys.cal_a = left;
    sys.cal_b = right;
  } else {
    // Odd period: one homogeneous step is left over. Note an
    // order-reversing map can only have odd period when all the products
    // involved commute (for sizes above 1 the identity cannot reverse
    // order), so this branch serves declared-period corner cases.
    total += left * fc[static_cast<std::size_t>(n - 1)] * right;
    sys.cal_a = left * fa[static_cast<std::size_t>(n - 1)];
    Matrix rb = id;
    for (int i = 1; i <= (n - 1) / 2; ++i) {
      rb = rb * fa[static_cast<std::size_t>(n - 2 * i + 1)] *
           fb[static_cast<std::size_t>(n - 2 * i)];
    }
    sys.cal_b = fb[static_cast<std::size_t>(n - 1)] * rb;
  }
  sys.cal_c = total;
  return sys;
}

SteinSystem build_stein_power(const LinearMatrixEquation& eq, int k) {
  if (k < 1) throw std::invalid_argument("build_stein_power: k must be >= 1");
  const SteinSystem base = build_stein(eq);
  Matrix pow_a = Matrix::identity(eq.dim());
  Matrix pow_b = Matrix::identity(eq.dim());
  Matrix total(eq.dim(), eq.dim());
  for (int t = 0; t < k; ++t) {
    total += pow_a * base.cal_c * pow_b;
    pow_a = pow_a * base.cal_a;
    pow_b = pow_b * base.cal_b;
  }
  return SteinSystem{pow_a, pow_b, total};
}

double equation_residual(const LinearMatrixEquation& eq, const Matrix& x) {
  return frob_dist(x, apply_rhs(eq, x));
}

double stein_residual(const SteinSystem& sys, const Matrix& x) {
  return frob_norm(x - sys.cal_a * x * sys.cal_b - sys.cal_c);
}

}  // namespace pstein
