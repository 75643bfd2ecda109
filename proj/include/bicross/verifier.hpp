#pragma once

#include "bicross/bicross.hpp"
#include "bicross/pairing.hpp"

namespace bicross {

struct UnknownSuite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical suite names, in pipeline order.
const std::vector<std::string>& suite_names();

/// Resolves user-facing aliases to canonical suite names.
std::string resolve_suite_name(const std::string& name);

/// (check name, suite) registry: every identity the engine verifies is
/// registered to exactly one suite; a test asserts the uniqueness.
const std::vector<std::pair<std::string, std::string>>& check_registry();

struct VerifierOptions {
  bool star_checks = true;
  bool force = false;  // keep going / build through failing gates
};

struct PipelineResult {
  std::optional<Bicrossproduct> ab;
  std::optional<DualBicrossproduct> cd;
  ReportBundle bundle;
  bool stopped_early = false;
};

/// matched pair -> action/coaction suites -> compatibility gates -> AB and
/// CD builds -> axioms -> integrals/star -> duality -> special cases.
/// Stops at the first failing gate unless forced; the bundle always holds
/// everything that ran.
PipelineResult full_pipeline(const MatchedPairModel& model, const ProbeSet& probes,
                             const VerifierOptions& opt = {});

/// Runs the pipeline and returns just the reports belonging to the named
/// suite (aliases accepted).
std::vector<Report> run_suite(const std::string& name, const MatchedPairModel& model,
                              const ProbeSet& probes, const VerifierOptions& opt = {});

}  // namespace bicross
