#include "pstein/equation_io.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

#include "pstein/errors.hpp"

namespace pstein {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

/// Collects path-tagged validation problems before giving up, so one
/// round trip through the parser reports everything wrong with a file.
class IssueList {
 public:
  void add(const std::string& path, const std::string& message) {
    issues_.push_back(path + ": " + message);
  }
  bool empty() const { return issues_.empty(); }
  [[noreturn]] void raise() const {
    throw SchemaError("equation document is invalid (" +
                          std::to_string(issues_.size()) + " problem" +
                          (issues_.size() == 1 ? "" : "s") + ")",
                      issues_);
  }
  void raise_if_any() const {
    if (!issues_.empty()) raise();
  }

 private:
  std::vector<std::string> issues_;
};

std::optional<Matrix> parse_matrix(const json& node, const std::string& path,
                                   IssueList& issues) {
  if (!node.is_array() || node.empty()) {
    issues.add(path, "expected a non-empty array of rows");
    return std::nullopt;
  }
  const std::size_t rows = node.size();
  std::size_t cols = 0;
  std::vector<Complex> entries;
  bool ok = true;
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = node[i];
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.empty()) {
      issues.add(row_path, "expected a non-empty array of [re, im] entries");
      ok = false;
      continue;
    }
    if (i == 0) {
      cols = row.size();
      entries.reserve(rows * cols);
    } else if (row.size() != cols) {
      issues.add(row_path, "row length " + std::to_string(row.size()) +
                               " differs from row 0 length " +
                               std::to_string(cols));
      ok = false;
      continue;
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      const json& entry = row[j];
      const std::string entry_path = row_path + "[" + std::to_string(j) + "]";
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        issues.add(entry_path, "expected an entry of the form [re, im]");
        ok = false;
        continue;
      }
      entries.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  if (!ok) return std::nullopt;
  return Matrix(static_cast<int>(rows), static_cast<int>(cols),
                std::move(entries));
}

std::optional<Matrix> parse_square_matrix(const json& parent, const char* key,
                                          const std::string& path,
                                          IssueList& issues) {
  if (!parent.contains(key)) {
    issues.add(path, "missing required matrix");
    return std::nullopt;
  }
  std::optional<Matrix> m = parse_matrix(parent[key], path, issues);
  if (m && !m->is_square()) {
    issues.add(path, "matrix must be square, got " + std::to_string(m->rows()) +
                         " x " + std::to_string(m->cols()));
    return std::nullopt;
  }
  return m;
}

std::optional<OperatorSpec> parse_operator(const json& node,
                                           const std::string& path,
                                           IssueList& issues) {
  if (!node.is_object()) {
    issues.add(path, "expected an operator object");
    return std::nullopt;
  }
  OperatorSpec spec;
  if (!node.contains("name") || !node["name"].is_string()) {
    issues.add(path + ".name", "expected an operator name string");
    return std::nullopt;
  }
  spec.name = node["name"].get<std::string>();
  if (node.contains("declared_period")) {
    const json& period = node["declared_period"];
    if (!period.is_number_integer() || period.get<long long>() < 1) {
      issues.add(path + ".declared_period", "expected a positive integer");
      return std::nullopt;
    }
    spec.declared_period = period.get<int>();
  }
  if (node.contains("params")) {
    const json& params = node["params"];
    if (!params.is_object()) {
      issues.add(path + ".params", "expected an object");
      return std::nullopt;
    }
    if (params.contains("permutation")) {
      const json& perm = params["permutation"];
      if (!perm.is_array() || perm.empty()) {
        issues.add(path + ".params.permutation",
                   "expected a non-empty index array");
        return std::nullopt;
      }
      std::vector<int> indices;
      indices.reserve(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) {
        if (!perm[i].is_number_integer()) {
          issues.add(path + ".params.permutation[" + std::to_string(i) + "]",
                     "expected an integer index");
          return std::nullopt;
        }
        indices.push_back(perm[i].get<int>());
      }
      spec.permutation = std::move(indices);
    }
  }
  // Validate against the builtin catalog right away so the error carries
  // the document path.
  try {
    (void)make_operator(spec);
  } catch (const std::invalid_argument& e) {
    issues.add(path, e.what());
    return std::nullopt;
  }
  return spec;
}

void parse_solver(const json& node, const std::string& path, IssueList& issues,
                  EquationDocument& doc) {
  if (!node.is_object()) {
    issues.add(path, "expected a solver object");
    return;
  }
  SolverConfig cfg;
  if (node.contains("method")) {
    const json& method = node["method"];
    const std::string value = method.is_string() ? method.get<std::string>() : "";
    if (value == "direct") {
      cfg.method = SolveMethod::kDirect;
    } else if (value == "smith") {
      cfg.method = SolveMethod::kSmith;
    } else if (value == "smith-l") {
      cfg.method = SolveMethod::kSmithEll;
    } else if (value == "r-smith") {
      cfg.method = SolveMethod::kRSmith;
    } else {
      issues.add(path + ".method",
                 "expected one of direct, smith, smith-l, r-smith");
    }
  }
  if (node.contains("tol")) {
    if (!node["tol"].is_number() || !(node["tol"].get<double>() > 0.0)) {
      issues.add(path + ".tol", "expected a positive number");
    } else {
      cfg.tol = node["tol"].get<double>();
    }
  }
  if (node.contains("max_iter")) {
    if (!node["max_iter"].is_number_integer() ||
        node["max_iter"].get<long long>() < 1) {
      issues.add(path + ".max_iter", "expected a positive integer");
    } else {
      cfg.max_iter = node["max_iter"].get<int>();
    }
  }
  if (node.contains("ell")) {
    if (!node["ell"].is_number_integer() || node["ell"].get<long long>() < 1) {
      issues.add(path + ".ell", "expected an integer >= 1");
    } else {
      cfg.ell = node["ell"].get<int>();
    }
  }
  if (node.contains("r")) {
    if (!node["r"].is_number_integer() || node["r"].get<long long>() < 2) {
      issues.add(path + ".r", "expected an integer >= 2");
    } else {
      cfg.r = node["r"].get<int>();
    }
  }
  doc.solver = cfg;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json operator_to_json(const OperatorSpec& spec) {
  ordered_json node;
  node["name"] = spec.name;
  if (spec.declared_period) node["declared_period"] = *spec.declared_period;
  if (spec.permutation) node["params"]["permutation"] = *spec.permutation;
  return node;
}

}  // namespace

EquationDocument parse_equation(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("document is not valid JSON", {std::string("$: ") + e.what()});
  }

  IssueList issues;
  if (!root.is_object()) {
    issues.add("$", "document must be a JSON object");
    issues.raise();
  }

  EquationDocument doc;

  if (!root.contains("schema_version") || !root["schema_version"].is_string()) {
    issues.add("$.schema_version", "expected the string \"1\"");
  } else {
    doc.schema_version = root["schema_version"].get<std::string>();
    if (doc.schema_version != "1") {
      issues.add("$.schema_version",
                 "unsupported version '" + doc.schema_version + "'");
    }
  }

  std::string kind = "single";
  if (root.contains("kind")) {
    if (!root["kind"].is_string()) {
      issues.add("$.kind", "expected \"single\" or \"multiterm\"");
    } else {
      kind = root["kind"].get<std::string>();
      if (kind != "single" && kind != "multiterm") {
        issues.add("$.kind", "unknown kind '" + kind + "'");
      }
    }
  }

  if (kind == "multiterm") {
    doc.kind = EquationDocument::Kind::kMultiterm;
    if (!root.contains("period") || !root["period"].is_number_integer() ||
        root["period"].get<long long>() < 1) {
      issues.add("$.period", "expected a positive integer");
    } else {
      doc.period = root["period"].get<int>();
    }
    std::optional<Matrix> c = parse_square_matrix(root, "C", "$.C", issues);
    if (c) doc.c = std::move(*c);
    if (!root.contains("terms") || !root["terms"].is_array() ||
        root["terms"].empty()) {
      issues.add("$.terms", "expected a non-empty array of terms");
    } else {
      for (std::size_t t = 0; t < root["terms"].size(); ++t) {
        const json& term = root["terms"][t];
        const std::string term_path = "$.terms[" + std::to_string(t) + "]";
        if (!term.is_object()) {
          issues.add(term_path, "expected a term object");
          continue;
        }
        EquationDocument::TermSpec spec;
        std::optional<Matrix> a =
            parse_square_matrix(term, "A", term_path + ".A", issues);
        std::optional<Matrix> b =
            parse_square_matrix(term, "B", term_path + ".B", issues);
        std::optional<OperatorSpec> op;
        if (!term.contains("operator")) {
          issues.add(term_path + ".operator", "missing operator");
        } else {
          op = parse_operator(term["operator"], term_path + ".operator", issues);
        }
        if (a && b && op) {
          if (c && (a->rows() != c->rows() || b->rows() != c->rows())) {
            issues.add(term_path,
                       "term size " + std::to_string(a->rows()) +
                           " does not match $.C size " + std::to_string(c->rows()));
            continue;
          }
          if (a->rows() != b->rows()) {
            issues.add(term_path + ".A / " + term_path + ".B",
                       "dimension mismatch: " + std::to_string(a->rows()) +
                           " vs " + std::to_string(b->rows()));
            continue;
          }
          spec.a = std::move(*a);
          spec.b = std::move(*b);
          spec.op = std::move(*op);
          doc.terms.push_back(std::move(spec));
        }
      }
    }
  } else {
    doc.kind = EquationDocument::Kind::kSingle;
    std::optional<Matrix> a = parse_square_matrix(root, "A", "$.A", issues);
    std::optional<Matrix> b = parse_square_matrix(root, "B", "$.B", issues);
    std::optional<Matrix> c = parse_square_matrix(root, "C", "$.C", issues);
    if (a && b && a->rows() != b->rows()) {
      issues.add("$.A / $.B", "dimension mismatch: " + std::to_string(a->rows()) +
                                  " x " + std::to_string(a->cols()) + " vs " +
                                  std::to_string(b->rows()) + " x " +
                                  std::to_string(b->cols()));
    }
    if (a && c && a->rows() != c->rows()) {
      issues.add("$.A / $.C", "dimension mismatch: " + std::to_string(a->rows()) +
                                  " vs " + std::to_string(c->rows()));
    }
    if (!root.contains("operator")) {
      issues.add("$.operator", "missing operator");
    } else {
      std::optional<OperatorSpec> op =
          parse_operator(root["operator"], "$.operator", issues);
      if (op) doc.op = std::move(*op);
    }
    if (a) doc.a = std::move(*a);
    if (b) doc.b = std::move(*b);
    if (c) doc.c = std::move(*c);
  }

  if (root.contains("solver")) {
    parse_solver(root["solver"], "$.solver", issues, doc);
  }

  issues.raise_if_any();

  // Semantic checks that need the fully assembled document: the operator
  // must accept the equation size.
  if (doc.kind == EquationDocument::Kind::kSingle) {
    const PeriodicOperator op = make_operator(doc.op);
    if (op.fixed_dim() && *op.fixed_dim() != doc.a.rows()) {
      issues.add("$.operator / $.A",
                 "operator is fixed to size " + std::to_string(*op.fixed_dim()) +
                     " but the equation has size " + std::to_string(doc.a.rows()));
    }
  } else {
    for (std::size_t t = 0; t < doc.terms.size(); ++t) {
      const PeriodicOperator op = make_operator(doc.terms[t].op);
      if (op.fixed_dim() && *op.fixed_dim() != doc.c.rows()) {
        issues.add("$.terms[" + std::to_string(t) + "].operator",
                   "operator is fixed to size " + std::to_string(*op.fixed_dim()) +
                       " but the equation has size " + std::to_string(doc.c.rows()));
      }
    }
  }
  issues.raise_if_any();

  return doc;
}

std::string emit_equation(const EquationDocument& doc) {
  ordered_json root;
  root["schema_version"] = doc.schema_version;
  if (doc.kind == EquationDocument::Kind::kSingle) {
    root["kind"] = "single";
    root["A"] = matrix_to_json(doc.a);
    root["B"] = matrix_to_json(doc.b);
    root["C"] = matrix_to_json(doc.c);
    root["operator"] = operator_to_json(doc.op);
  } else {
    root["kind"] = "multiterm";
    root["period"] = doc.period;
    root["terms"] = ordered_json::array();
    for (const EquationDocument::TermSpec& term : doc.terms) {
      ordered_json node;
      node["A"] = matrix_to_json(term.a);
      node["B"] = matrix_to_json(term.b);
      node["operator"] = operator_to_json(term.op);
      root["terms"].push_back(std::move(node));
    }
    root["C"] = matrix_to_json(doc.c);
  }
  if (doc.solver) {
    ordered_json node;
    node["method"] = to_string(doc.solver->method);
    node["tol"] = doc.solver->tol;
    node["max_iter"] = doc.solver->max_iter;
    node["ell"] = doc.solver->ell;
    node["r"] = doc.solver->r;
    root["solver"] = std::move(node);
  }
  return root.dump(2) + "\n";
}

PeriodicOperator make_operator(const OperatorSpec& spec) {
  BuiltinOperatorParams params;
  params.declared_period = spec.declared_period;
  params.permutation = spec.permutation;
  return make_builtin(spec.name, params);
}

LinearMatrixEquation to_equation(const EquationDocument& doc) {
  if (doc.kind != EquationDocument::Kind::kSingle) {
    throw std::invalid_argument("to_equation: document is not of kind single");
  }
  return LinearMatrixEquation(doc.a, doc.b, doc.c, make_operator(doc.op));
}

MultiTermEquation to_multiterm(const EquationDocument& doc) {
  if (doc.kind != EquationDocument::Kind::kMultiterm) {
    throw std::invalid_argument("to_multiterm: document is not of kind multiterm");
  }
  std::vector<MultiTermEquation::Term> terms;
  terms.reserve(doc.terms.size());
  for (const EquationDocument::TermSpec& term : doc.terms) {
    terms.push_back({term.a, term.b, make_operator(term.op)});
  }
  return MultiTermEquation(std::move(terms), doc.c, doc.period);
}

}  // namespace pstein
