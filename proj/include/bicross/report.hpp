#pragma once

#include "bicross/linop.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bicross {

enum class CheckStatus { Pass, Fail, Skipped };

/// Failing input together with both evaluated sides, all in exact
/// coefficients, plus the factor-by-factor trace of a composed operator so
/// a long canonical-map chain pinpoints the first differing intermediate.
struct Counterexample {
  std::string input;
  std::string lhs;
  std::string rhs;
  std::vector<std::pair<std::string, std::string>> lhs_trace;
  std::vector<std::pair<std::string, std::string>> rhs_trace;
};

struct CheckResult {
  std::string name;
  std::string law;
  CheckStatus status = CheckStatus::Pass;
  size_t cases = 0;
  std::optional<Counterexample> cex;
  std::string note;

  static CheckResult pass(std::string name, std::string law, size_t cases,
                          std::string note = "");
  static CheckResult fail(std::string name, std::string law, Counterexample cex,
                          size_t cases = 0);
  static CheckResult skipped(std::string name, std::string law, std::string why);
};

struct Report {
  std::string suite;
  std::string subject;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  size_t failures() const;
  std::string render_text() const;
  std::string render_json() const;  // stable key order
};

struct ReportBundle {
  std::vector<Report> reports;
  bool all_pass() const;
  std::string render_text() const;
  std::string render_json() const;
};

/// Raised when a build step is gated on a report that did not pass.
struct PreconditionFailed : std::runtime_error {
  Report report;
  explicit PreconditionFailed(Report r)
      : std::runtime_error("precondition failed: suite '" + r.suite + "' has " +
                           std::to_string(r.failures()) + " failing check(s)"),
        report(std::move(r)) {}
};

/// Compares two operators on probes and renders the result, tracing the
/// factors of composed chains on failure.
CheckResult check_ops_equal(std::string name, std::string law, const LinOp& lhs,
                            const LinOp& rhs, const std::vector<Vec>& probes);

struct ProbeSet;

/// Streaming variant over the operators' common input shape: exhaustive
/// basis words are scanned in parallel without materializing the probe
/// list; random mode draws seeded vectors. Deterministic either way.
CheckResult check_ops_equal(std::string name, std::string law, const LinOp& lhs,
                            const LinOp& rhs, const ProbeSet& probes);

std::vector<std::pair<std::string, std::string>> trace_chain(const LinOp& op, const Vec& input);

}  // namespace bicross
