#include "bicross/report.hpp"

#include "bicross/parallel.hpp"
#include "bicross/probes.hpp"

#include <json.hpp>

#include <sstream>

namespace bicross {

CheckResult CheckResult::pass(std::string name, std::string law, size_t cases,
                              std::string note) {
  return {std::move(name), std::move(law), CheckStatus::Pass, cases, std::nullopt,
          std::move(note)};
}

CheckResult CheckResult::fail(std::string name, std::string law, Counterexample cex,
                              size_t cases) {
  return {std::move(name), std::move(law), CheckStatus::Fail, cases, std::move(cex), ""};
}

CheckResult CheckResult::skipped(std::string name, std::string law, std::string why) {
  return {std::move(name), std::move(law), CheckStatus::Skipped, 0, std::nullopt,
          std::move(why)};
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

size_t Report::failures() const {
  size_t n = 0;
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) ++n;
  return n;
}

namespace {

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skipped:
      return "SKIP";
  }
  return "?";
}

}  // namespace

std::string Report::render_text() const {
  std::ostringstream os;
  os << "suite " << suite;
  if (!subject.empty()) os << " (" << subject << ")";
  os << (all_pass() ? "  [ok]" : "  [FAILED]") << "\n";
  for (const auto& c : checks) {
    os << "  [" << status_str(c.status) << "] " << c.name;
    if (c.cases) os << "  (" << c.cases << " cases)";
    if (!c.note.empty()) os << "  -- " << c.note;
    os << "\n";
    if (!c.law.empty()) os << "         law: " << c.law << "\n";
    if (c.cex) {
      os << "         input: " << c.cex->input << "\n";
      os << "         lhs:   " << c.cex->lhs << "\n";
      os << "         rhs:   " << c.cex->rhs << "\n";
      if (!c.cex->lhs_trace.empty()) {
        os << "         lhs factor trace:\n";
        for (const auto& [f, v] : c.cex->lhs_trace) os << "           " << f << " => " << v << "\n";
      }
      if (!c.cex->rhs_trace.empty()) {
        os << "         rhs factor trace:\n";
        for (const auto& [f, v] : c.cex->rhs_trace) os << "           " << f << " => " << v << "\n";
      }
    }
  }
  return os.str();
}

namespace {

nlohmann::ordered_json check_to_json(const CheckResult& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["law"] = c.law;
  j["status"] = status_str(c.status);
  j["cases"] = c.cases;
  if (!c.note.empty()) j["note"] = c.note;
  if (c.cex) {
    nlohmann::ordered_json x;
    x["input"] = c.cex->input;
    x["lhs"] = c.cex->lhs;
    x["rhs"] = c.cex->rhs;
    if (!c.cex->lhs_trace.empty()) {
      nlohmann::ordered_json t = nlohmann::ordered_json::array();
      for (const auto& [f, v] : c.cex->lhs_trace) t.push_back({{"factor", f}, {"value", v}});
      x["lhs_trace"] = t;
    }
    if (!c.cex->rhs_trace.empty()) {
      nlohmann::ordered_json t = nlohmann::ordered_json::array();
      for (const auto& [f, v] : c.cex->rhs_trace) t.push_back({{"factor", f}, {"value", v}});
      x["rhs_trace"] = t;
    }
    j["counterexample"] = x;
  }
  return j;
}

nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  if (!r.subject.empty()) j["subject"] = r.subject;
  j["all_pass"] = r.all_pass();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  j["checks"] = checks;
  return j;
}

}  // namespace

std::string Report::render_json() const { return report_to_json(*this).dump(2) + "\n"; }

bool ReportBundle::all_pass() const {
  for (const auto& r : reports)
    if (!r.all_pass()) return false;
  return true;
}

std::string ReportBundle::render_text() const {
  std::string out;
  for (const auto& r : reports) out += r.render_text();
  out += all_pass() ? "all suites passed\n" : "SOME SUITES FAILED\n";
  return out;
}

std::string ReportBundle::render_json() const {
  nlohmann::ordered_json j;
  j["all_pass"] = all_pass();
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (const auto& r : reports) rs.push_back(report_to_json(r));
  j["suites"] = rs;
  return j.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> trace_chain(const LinOp& op, const Vec& input) {
  std::vector<std::pair<std::string, std::string>> out;
  const auto& factors = op.factors();
  if (factors.empty()) return out;
  Vec v = input;
  for (size_t i = factors.size(); i-- > 0;) {
    v = factors[i].apply(v);
    out.emplace_back(factors[i].label(), v.describe());
  }
  return out;
}

namespace {

CheckResult fail_with_trace(std::string name, std::string law, const LinOp& lhs,
                            const LinOp& rhs, const Vec& input, size_t cases) {
  Counterexample cex;
  cex.input = input.describe();
  cex.lhs = lhs.apply(input).describe();
  cex.rhs = rhs.apply(input).describe();
  cex.lhs_trace = trace_chain(lhs, input);
  cex.rhs_trace = trace_chain(rhs, input);
  return CheckResult::fail(std::move(name), std::move(law), std::move(cex), cases);
}

}  // namespace

CheckResult check_ops_equal(std::string name, std::string law, const LinOp& lhs,
                            const LinOp& rhs, const std::vector<Vec>& probes) {
  auto mismatch = op_mismatch(lhs, rhs, probes);
  if (!mismatch) return CheckResult::pass(std::move(name), std::move(law), probes.size());
  return fail_with_trace(std::move(name), std::move(law), lhs, rhs, mismatch->input,
                         probes.size());
}

CheckResult check_ops_equal(std::string name, std::string law, const LinOp& lhs,
                            const LinOp& rhs, const ProbeSet& probes) {
  const Shape& domain = lhs.in_shape();
  if (!shape_equal(domain, rhs.in_shape()))
    throw ShapeMismatch("check_ops_equal " + name + ": operator domains differ");
  auto dim = shape_dimension(domain);
  if (dim && probes.wants_exhaustive(*dim)) {
    auto bad = scan_first_failure(*dim, [&](size_t i) {
      Word w = word_at(domain, i);
      return lhs.apply_basis(w) == rhs.apply_basis(w);
    });
    if (!bad) return CheckResult::pass(std::move(name), std::move(law), *dim, "exhaustive");
    Vec input = Vec::basis(domain, word_at(domain, *bad));
    return fail_with_trace(std::move(name), std::move(law), lhs, rhs, input, *dim);
  }
  return check_ops_equal(std::move(name), std::move(law), lhs, rhs, probes.vectors(domain));
}

}  // namespace bicross
