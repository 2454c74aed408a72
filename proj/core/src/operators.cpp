#include "pstein/operators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "pstein/errors.hpp"
#include "pstein/random.hpp"

namespace pstein {

PeriodicOperator::PeriodicOperator(std::string name, int period,
                                   OperatorKind kind, ApplyFn apply,
                                   std::optional<int> fixed_dim)
    : name_(std::move(name)),
      period_(period),
      kind_(kind),
      apply_(std::move(apply)),
      fixed_dim_(fixed_dim) {
  if (period_ < 1) {
    throw std::invalid_argument("operator period must be >= 1, got " +
                                std::to_string(period_));
  }
  if (!apply_) {
    throw std::invalid_argument("operator '" + name_ + "' has no apply function");
  }
}

Matrix PeriodicOperator::apply(const Matrix& x) const {
  if (!x.is_square()) {
    throw DimensionError("operator '" + name_ + "' needs a square matrix, got " +
                         std::to_string(x.rows()) + " x " + std::to_string(x.cols()));
  }
  if (fixed_dim_ && x.rows() != *fixed_dim_) {
    throw DimensionError("operator '" + name_ + "' is fixed to size " +
                         std::to_string(*fixed_dim_) + ", got " +
                         std::to_string(x.rows()));
  }
  return apply_(x);
}

Matrix PeriodicOperator::apply_power(int i, const Matrix& x) const {
  if (i < 0) {
    throw std::invalid_argument("apply_power: exponent must be >= 0, got " +
                                std::to_string(i));
  }
  // Applies literally i times. No modular shortcut here: periodicity is a
  // claim about the operator that check_operator has to be able to test.
  Matrix out = x;
  for (int k = 0; k < i; ++k) out = apply(out);
  return out;
}

PeriodicOperator identity_op(int declared_period) {
  return PeriodicOperator("identity", declared_period,
                          OperatorKind::kOrderPreserving,
                          [](const Matrix& x) { return x; });
}

PeriodicOperator transpose_op() {
  return PeriodicOperator("transpose", 2, OperatorKind::kOrderReversing,
                          [](const Matrix& x) { return x.transpose(); });
}

PeriodicOperator hermitian_op() {
  return PeriodicOperator("hermitian", 2, OperatorKind::kOrderReversing,
                          [](const Matrix& x) { return x.adjoint(); });
}

PeriodicOperator conjugate_op() {
  return PeriodicOperator("conjugate", 2, OperatorKind::kOrderPreserving,
                          [](const Matrix& x) { return x.conjugate(); });
}

PeriodicOperator anti_transpose_op() {
  return PeriodicOperator("anti_transpose", 2, OperatorKind::kOrderReversing,
                          [](const Matrix& x) {
                            const int m = x.rows();
                            Matrix out(m, m);
                            for (int i = 0; i < m; ++i)
                              for (int j = 0; j < m; ++j)
                                out(i, j) = x(m - 1 - j, m - 1 - i);
                            return out;
                          });
}

namespace {

/// Index form of a permutation matrix: maps column j to the row holding
/// its one. Throws if p is not a permutation matrix.
std::vector<int> permutation_indices(const Matrix& p) {
  if (!p.is_square()) {
    throw std::invalid_argument("perm_similarity: P must be square");
  }
  const int m = p.rows();
  std::vector<int> idx(static_cast<std::size_t>(m), -1);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      const Complex z = p(i, j);
      if (z == Complex(1.0, 0.0)) {
        if (idx[static_cast<std::size_t>(j)] != -1) {
          throw std::invalid_argument(
              "perm_similarity: column " + std::to_string(j) + " has several ones");
        }
        idx[static_cast<std::size_t>(j)] = i;
      } else if (z != Complex(0.0, 0.0)) {
        throw std::invalid_argument("perm_similarity: P must be 0/1 valued");
      }
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int j = 0; j < m; ++j) {
    const int i = idx[static_cast<std::size_t>(j)];
    if (i < 0 || seen[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("perm_similarity: P is not a permutation matrix");
    }
    seen[static_cast<std::size_t>(i)] = true;
  }
  return idx;
}

/// Multiplicative order of a permutation: lcm of its cycle lengths.
int permutation_order(const std::vector<int>& idx) {
  const int m = static_cast<int>(idx.size());
  std::vector<bool> visited(static_cast<std::size_t>(m), false);
  long long order = 1;
  for (int start = 0; start < m; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    int j = start;
    while (!visited[static_cast<std::size_t>(j)]) {
      visited[static_cast<std::size_t>(j)] = true;
      j = idx[static_cast<std::size_t>(j)];
      ++len;
    }
    order = std::lcm(order, static_cast<long long>(len));
  }
  return static_cast<int>(order);
}

}  // namespace

PeriodicOperator perm_similarity_op(const Matrix& p) {
  const std::vector<int> idx = permutation_indices(p);
  const int m = p.rows();
  const int period = permutation_order(idx);
  // P^T X P permutes entries only: (P^T X P)(i,j) = X(idx[i], idx[j]).
  // Working on indices keeps the map exact, with no arithmetic at all.
  return PeriodicOperator(
      "perm_similarity", period, OperatorKind::kOrderPreserving,
      [idx, m](const Matrix& x) {
        Matrix out(m, m);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            out(i, j) = x(idx[static_cast<std::size_t>(i)],
                          idx[static_cast<std::size_t>(j)]);
        return out;
      },
      m);
}

Matrix permutation_matrix(const std::vector<int>& p) {
  const int m = static_cast<int>(p.size());
  Matrix out(m, m);
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int j = 0; j < m; ++j) {
    const int i = p[static_cast<std::size_t>(j)];
    if (i < 0 || i >= m || seen[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument(
          "permutation_matrix: indices must be a permutation of 0.." +
          std::to_string(m - 1));
    }
    seen[static_cast<std::size_t>(i)] = true;
    out(i, j) = Complex(1.0, 0.0);
  }
  return out;
}

Matrix primary_permutation(int m) {
  if (m < 1) {
    throw std::invalid_argument("primary_permutation: size must be >= 1");
  }
  Matrix p(m, m);
  for (int i = 0; i < m; ++i) p(i, (i + 1) % m) = Complex(1.0, 0.0);
  return p;
}

namespace {

int minimal_builtin_period(const std::string& name) {
  if (name == "identity") return 1;
  return 2;  // transpose, hermitian, conjugate, anti_transpose
}

}  // namespace

PeriodicOperator make_builtin(const std::string& name,
                              const BuiltinOperatorParams& params) {
  if (name == "perm_similarity") {
    if (!params.permutation) {
      throw std::invalid_argument("perm_similarity requires a permutation");
    }
    PeriodicOperator op = perm_similarity_op(permutation_matrix(*params.permutation));
    if (params.declared_period) {
      if (*params.declared_period <= 0 || *params.declared_period % op.period() != 0) {
        throw std::invalid_argument(
            "declared_period " + std::to_string(*params.declared_period) +
            " is not a positive multiple of the permutation order " +
            std::to_string(op.period()));
      }
      return PeriodicOperator(op.name(), *params.declared_period, op.kind(),
                              [op](const Matrix& x) { return op.apply(x); },
                              op.fixed_dim());
    }
    return op;
  }

  PeriodicOperator op = [&]() -> PeriodicOperator {
    if (name == "identity") return identity_op();
    if (name == "transpose") return transpose_op();
    if (name == "hermitian") return hermitian_op();
    if (name == "conjugate") return conjugate_op();
    if (name == "anti_transpose") return anti_transpose_op();
    throw std::invalid_argument("unknown operator '" + name + "'");
  }();

  if (params.permutation) {
    throw std::invalid_argument("operator '" + name + "' takes no permutation");
  }
  if (params.declared_period) {
    const int minimal = minimal_builtin_period(name);
    if (*params.declared_period <= 0 || *params.declared_period % minimal != 0) {
      throw std::invalid_argument(
          "declared_period " + std::to_string(*params.declared_period) +
          " is not a positive multiple of " + std::to_string(minimal) +
          " for operator '" + name + "'");
    }
    return PeriodicOperator(op.name(), *params.declared_period, op.kind(),
                            [op](const Matrix& x) { return op.apply(x); });
  }
  return op;
}

OperatorCheckReport check_operator(const PeriodicOperator& op, int dim,
                                   int trials, std::uint64_t seed, double tol) {
  if (op.fixed_dim() && dim != *op.fixed_dim()) {
    throw DimensionError("check_operator: operator '" + op.name() +
                         "' is fixed to size " + std::to_string(*op.fixed_dim()) +
                         ", got " + std::to_string(dim));
  }
  OperatorCheckReport report;
  report.trials = trials;
  report.seed = seed;
  report.tol = tol;

  Rng rng = split_rng(seed, 0);
  for (int t = 0; t < trials; ++t) {
    const Matrix x = random_matrix(rng, dim, dim);
    const Matrix y = random_matrix(rng, dim, dim);
    const Matrix fx = op.apply(x);
    const Matrix fy = op.apply(y);

    report.additivity_err =
        std::max(report.additivity_err, frob_dist(op.apply(x + y), fx + fy));

    const Matrix expected_product =
        op.order_preserving() ? fx * fy : fy * fx;
    report.multiplicativity_err =
        std::max(report.multiplicativity_err,
                 frob_dist(op.apply(x * y), expected_product));

    report.periodicity_err =
        std::max(report.periodicity_err,
                 frob_dist(op.apply_power(op.period(), x), x));
  }

  report.passed = report.additivity_err <= tol &&
                  report.multiplicativity_err <= tol &&
                  report.periodicity_err <= tol;
  return report;
}

}  // namespace pstein
