#ifndef PSTEIN_EQUATION_IO_HPP
#define PSTEIN_EQUATION_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "pstein/matrix.hpp"
#include "pstein/multiterm.hpp"
#include "pstein/operators.hpp"
#include "pstein/solvers.hpp"
#include "pstein/stein_transform.hpp"

namespace pstein {

/// Operator description as it appears in a document.
struct OperatorSpec {
  std::string name;
  std::optional<int> declared_period;
  /// perm_similarity only: index array, one in row permutation[j] of
  /// column j.
  std::optional<std::vector<int>> permutation;
};

/// Parsed form of an equation document.
///
/// Documents are JSON objects with a schema_version of "1" and a kind of
/// either "single" (fields A, B, C, operator) or "multiterm" (fields
/// terms, C, period). Matrices are arrays of rows, each entry a two-element
/// [re, im] array. An optional "solver" object carries SolverConfig
/// fields (method, tol, max_iter, ell, r).
struct EquationDocument {
  enum class Kind { kSingle, kMultiterm };

  std::string schema_version = "1";
  Kind kind = Kind::kSingle;

  // kind == kSingle
  Matrix a;
  Matrix b;
  Matrix c;
  OperatorSpec op;

  // kind == kMultiterm
  struct TermSpec {
    Matrix a;
    Matrix b;
    OperatorSpec op;
  };
  std::vector<TermSpec> terms;
  int period = 1;

  std::optional<SolverConfig> solver;
};

/// Parse and fully validate a JSON document. Collects every problem it
/// can find and throws one SchemaError whose issues are prefixed with
/// JSON paths ("$.A[1]: ...").
EquationDocument parse_equation(const std::string& text);

/// Serialize a document in canonical form: fixed key order, matrices as
/// [re, im] pairs, numbers in round-trip exact form. parse followed by
/// emit is idempotent on the canonical form.
std::string emit_equation(const EquationDocument& doc);

/// Instantiate the operator described by a spec (builtin lookup plus
/// parameter validation).
PeriodicOperator make_operator(const OperatorSpec& spec);

/// Build the equation from a kind == kSingle document.
LinearMatrixEquation to_equation(const EquationDocument& doc);

/// Build the equation from a kind == kMultiterm document.
MultiTermEquation to_multiterm(const EquationDocument& doc);

}  // namespace pstein

#endif  // PSTEIN_EQUATION_IO_HPP
