#include "bicross/cli.hpp"

#include "bicross/export.hpp"
#include "bicross/parse.hpp"
#include "bicross/verifier.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace bicross {

namespace {

uint64_t default_seed() {
  if (const char* env = std::getenv("BICROSS_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return 1;
}

// "exhaustive" | "random:<seed>:<count>" | "auto[:<seed>[:<count>[:<limit>]]]"
ProbeSet parse_probes(const std::string& spec) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t colon = spec.find(':', pos);
    if (colon == std::string::npos) {
      parts.push_back(spec.substr(pos));
      break;
    }
    parts.push_back(spec.substr(pos, colon - pos));
    pos = colon + 1;
  }
  if (parts.empty()) throw std::runtime_error("empty probe spec");
  if (parts[0] == "exhaustive") return ProbeSet::exhaustive();
  if (parts[0] == "random") {
    if (parts.size() != 3) throw std::runtime_error("expected random:<seed>:<count>");
    return ProbeSet::random(std::stoull(parts[1]), std::stoull(parts[2]));
  }
  if (parts[0] == "auto") {
    uint64_t seed = parts.size() > 1 ? std::stoull(parts[1]) : default_seed();
    size_t count = parts.size() > 2 ? std::stoull(parts[2]) : 100;
    size_t limit = parts.size() > 3 ? std::stoull(parts[3]) : 10000;
    return ProbeSet::automatic(seed, count, limit);
  }
  throw std::runtime_error("unknown probe mode '" + parts[0] + "'");
}

MatchedPairModel load_model(const std::string& path) {
  ParsedInput in = parse_input_file(path);
  if (!in.pair) throw std::runtime_error(path + ": no matched pair defined");
  return instantiate_matched_pair(*in.pair);
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bicross: exact verification engine for bicrossproduct multiplier Hopf "
               "algebras built from matched pairs of groups"};
  app.require_subcommand(1);

  std::string file, probes_spec = "auto", suite, out_path, export_path, export_what = "AB";
  bool json = false, force = false, no_star = false;

  auto add_common = [&](CLI::App* cmd, bool with_force) {
    cmd->add_option("file", file, "input file (group/matched-pair description)")->required();
    cmd->add_option("--probes", probes_spec,
                    "exhaustive | random:<seed>:<count> | auto[:<seed>[:<count>[:<limit>]]]");
    cmd->add_flag("--json", json, "machine-readable report");
    cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    if (with_force)
      cmd->add_flag("--force", force, "build through failing precondition reports");
  };

  auto* cmd_check = app.add_subcommand("check-matched-pair",
                                       "verify the matched-pair identities");
  add_common(cmd_check, false);

  auto* cmd_build = app.add_subcommand(
      "build-bicross", "run the full construction pipeline and report every suite");
  add_common(cmd_build, true);
  cmd_build->add_option("--export", export_path, "write structure constants of AB");
  cmd_build->add_option("--export-what", export_what, "AB or CD");
  cmd_build->add_flag("--no-star", no_star, "skip involution checks");

  auto* cmd_verify = app.add_subcommand("verify", "run one named verification suite");
  add_common(cmd_verify, true);
  cmd_verify->add_option("--suite", suite, "suite name")->required();

  auto* cmd_export = app.add_subcommand("export", "write the structure-constant serialization");
  add_common(cmd_export, true);
  cmd_export->add_option("--what", export_what, "AB or CD");

  auto* cmd_pair = app.add_subcommand("pair-duality", "verify the AB/CD duality pairing");
  add_common(cmd_pair, true);

  std::vector<const char*> argv;
  argv.push_back("bicross");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    ProbeSet probes = parse_probes(probes_spec);
    VerifierOptions opt;
    opt.force = force;
    opt.star_checks = !no_star;

    if (cmd_check->parsed()) {
      MatchedPairModel model = load_model(file);
      Report r = check_matched_pair(model.mp, probes);
      write_output(json ? r.render_json() : r.render_text(), out_path, out);
      return r.all_pass() ? 0 : 1;
    }
    if (cmd_build->parsed()) {
      MatchedPairModel model = load_model(file);
      PipelineResult res = full_pipeline(model, probes, opt);
      if (!export_path.empty()) {
        const Mha* target = nullptr;
        if (export_what == "AB" && res.ab) target = res.ab->AB.get();
        if (export_what == "CD" && res.cd) target = res.cd->CD.get();
        if (!target)
          throw std::runtime_error("nothing to export: " + export_what + " was not built");
        std::ofstream f(export_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + export_path + "'");
        f << export_structure_constants(*target);
      }
      write_output(json ? res.bundle.render_json() : res.bundle.render_text(), out_path, out);
      return res.bundle.all_pass() && !res.stopped_early ? 0 : 1;
    }
    if (cmd_verify->parsed()) {
      MatchedPairModel model = load_model(file);
      auto reports = run_suite(suite, model, probes, opt);
      ReportBundle bundle{std::move(reports)};
      write_output(json ? bundle.render_json() : bundle.render_text(), out_path, out);
      return bundle.all_pass() ? 0 : 1;
    }
    if (cmd_export->parsed()) {
      MatchedPairModel model = load_model(file);
      PipelineResult res = full_pipeline(model, probes, {true, true});
      const Mha* target = nullptr;
      if (export_what == "AB" && res.ab) target = res.ab->AB.get();
      if (export_what == "CD" && res.cd) target = res.cd->CD.get();
      if (!target)
        throw std::runtime_error("nothing to export: " + export_what + " was not built");
      write_output(export_structure_constants(*target), out_path, out);
      return 0;
    }
    if (cmd_pair->parsed()) {
      MatchedPairModel model = load_model(file);
      PipelineResult res = full_pipeline(model, probes, {opt.star_checks, true});
      if (!res.ab || !res.cd) throw std::runtime_error("construction failed; cannot pair");
      Report r = check_pairing(bicross_pairing(*res.ab, *res.cd), *res.ab->AB, *res.cd->CD,
                               probes);
      r.subject = "AB with CD";
      write_output(json ? r.render_json() : r.render_text(), out_path, out);
      return r.all_pass() ? 0 : 1;
    }
  } catch (const UnknownSuite& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << "\n" << e.report.render_text();
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace bicross
