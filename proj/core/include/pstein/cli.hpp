#ifndef PSTEIN_CLI_HPP
#define PSTEIN_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pstein/solvers.hpp"

namespace pstein::cli {

/// Exit codes shared by every subcommand.
///
/// kMath covers diagnosed mathematical outcomes (unsolvable or
/// inconsistent systems, solver divergence, recovery gate failures,
/// family homogeneity failures); kError covers malformed input and
/// internal faults. Errors are reported as a JSON envelope
/// {"error": {"category", "type", "message", "issues"?}} on the error
/// stream.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMath = 2;

/// Command-line overrides applied on top of a document's solver block.
struct SolveOverrides {
  std::optional<SolveMethod> method;
  std::optional<double> tol;
  std::optional<int> max_iter;
  std::optional<int> ell;
  std::optional<int> r;
};

/// Solve the equation in `document_text` and print the report as JSON on
/// `out`. Warnings also go to `err` as plain lines.
int run_solve(const std::string& document_text, const SolveOverrides& overrides,
              std::ostream& out, std::ostream& err);

/// Operator-law and solvability diagnostics without solving: operator
/// check (additivity, product law, declared period), the reciprocal-free
/// and spectral-radius tests, and for anti-transpose documents the
/// small-spectrum uniqueness test.
int run_check(const std::string& document_text, std::uint64_t seed,
              std::ostream& out, std::ostream& err);

/// Spectra relevant to the document: sigma(A), sigma(B), sigma(calA),
/// sigma(calB) and rho for single-operator documents (plus predicted vs
/// computed linearization spectra for anti-transpose), the generalized
/// Stein spectrum for multiterm documents.
int run_spectrum(const std::string& document_text, std::ostream& out,
                 std::ostream& err);

/// Names accepted by run_demo.
std::vector<std::string> demo_names();

/// Run a named walkthrough. Narration goes to `err`, a JSON transcript of
/// every computed quantity and assertion to `out`. Returns kExitOk when
/// all assertions hold, kExitMath when one fails.
int run_demo(const std::string& name, std::uint64_t seed, std::ostream& out,
             std::ostream& err);

}  // namespace pstein::cli

#endif  // PSTEIN_CLI_HPP
