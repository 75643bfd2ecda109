#include "bicross/verifier.hpp"

#include <algorithm>

namespace bicross {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "matched-pair",     "module-algebra",        "comodule-coalgebra",
      "coaction-support", "compat-conditions",     "compat-conditions-dual",
      "mha-axioms",       "star-structure",        "integrals",
      "duality",          "special-cases"};
  return names;
}

std::string resolve_suite_name(const std::string& name) {
  static const std::map<std::string, std::string> aliases{
      {"assumption-2.6", "coaction-support"},
      {"thm-3.14-conditions", "compat-conditions"},
      {"thm-3.16-conditions", "compat-conditions-dual"},
  };
  auto it = aliases.find(name);
  std::string canonical = it == aliases.end() ? name : it->second;
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), canonical) == names.end())
    throw UnknownSuite("unknown suite '" + name + "'");
  return canonical;
}

const std::vector<std::pair<std::string, std::string>>& check_registry() {
  static const std::vector<std::pair<std::string, std::string>> reg{
      {"unit-laws-tr", "matched-pair"},
      {"unit-laws-tl", "matched-pair"},
      {"tr-is-action", "matched-pair"},
      {"tl-is-action", "matched-pair"},
      {"tl-product-twist", "matched-pair"},
      {"tr-product-twist", "matched-pair"},
      {"source-consistency", "matched-pair"},

      {"module-law", "module-algebra"},
      {"action-unital", "module-algebra"},
      {"twist-module-identity", "module-algebra"},
      {"twist-module-algebra-identity", "module-algebra"},
      {"twist-bijective", "module-algebra"},
      {"twist-op-bijective", "module-algebra"},
      {"counit-action", "module-algebra"},

      {"cotwist-bijective", "comodule-coalgebra"},
      {"cotwist-op-bijective", "comodule-coalgebra"},
      {"cotwist-inverse-closed-form", "comodule-coalgebra"},
      {"coaction-coassociativity", "comodule-coalgebra"},
      {"comodule-coalgebra-law", "comodule-coalgebra"},
      {"coaction-counit-left", "comodule-coalgebra"},
      {"coaction-counit-right", "comodule-coalgebra"},
      {"cotwist-op-coherence", "comodule-coalgebra"},

      {"iterated-coaction-finite", "coaction-support"},
      {"iterated-coaction-bimodule", "coaction-support"},

      {"condition-c1", "compat-conditions"},
      {"condition-c2", "compat-conditions"},
      {"condition-c3", "compat-conditions"},
      {"gamma-product-twist", "compat-conditions"},
      {"action-coproduct-twist", "compat-conditions"},

      {"dual-condition-c1", "compat-conditions-dual"},
      {"dual-condition-c2", "compat-conditions-dual"},
      {"dual-condition-c3", "compat-conditions-dual"},

      {"associativity", "mha-axioms"},
      {"coassociativity", "mha-axioms"},
      {"nondegeneracy", "mha-axioms"},
      {"t1-bijective", "mha-axioms"},
      {"t2-bijective", "mha-axioms"},
      {"t3-bijective", "mha-axioms"},
      {"t4-bijective", "mha-axioms"},
      {"counit-left", "mha-axioms"},
      {"counit-right", "mha-axioms"},
      {"antipode-left", "mha-axioms"},
      {"antipode-right", "mha-axioms"},
      {"counit-multiplicative", "mha-axioms"},
      {"antipode-bijective", "mha-axioms"},
      {"commutativity", "mha-axioms"},
      {"cocommutativity", "mha-axioms"},
      {"canonical-vs-direct-t1", "mha-axioms"},
      {"canonical-vs-direct-t2", "mha-axioms"},
      {"coproduct-multiplicative-on-A", "mha-axioms"},
      {"coproduct-commutation-with-B", "mha-axioms"},

      {"star-antiautomorphism", "star-structure"},
      {"star-involutive", "star-structure"},
      {"star-coproduct-compat", "star-structure"},
      {"action-star", "star-structure"},
      {"coaction-star", "star-structure"},
      {"integral-positivity", "star-structure"},

      {"left-integral-invariance", "integrals"},
      {"right-integral-invariance", "integrals"},
      {"right-integral-left-cover", "integrals"},
      {"left-integral-right-cover", "integrals"},

      {"pairing-product-coproduct", "duality"},
      {"pairing-coproduct-product", "duality"},
      {"pairing-antipode", "duality"},

      {"trivial-action-structure-constants", "special-cases"},
      {"trivial-coaction-coproduct", "special-cases"},
      {"nonunital-character", "special-cases"},
  };
  return reg;
}

namespace {

std::string suite_of_check(const std::string& check) {
  for (const auto& [name, suite] : check_registry())
    if (name == check) return suite;
  return "";
}

// Moves star- and integral-family checks produced by verify_mha into their
// registered suites, so each identity reports under exactly one suite.
void regroup(Report mha_report, std::vector<Report>& out) {
  Report axioms{mha_report.suite, mha_report.subject, {}};
  Report star{"star-structure", mha_report.subject, {}};
  Report integrals{"integrals", mha_report.subject, {}};
  for (auto& c : mha_report.checks) {
    std::string suite = suite_of_check(c.name);
    if (suite == "star-structure")
      star.checks.push_back(std::move(c));
    else if (suite == "integrals")
      integrals.checks.push_back(std::move(c));
    else
      axioms.checks.push_back(std::move(c));
  }
  out.push_back(std::move(axioms));
  if (!star.checks.empty()) out.push_back(std::move(star));
  if (!integrals.checks.empty()) out.push_back(std::move(integrals));
}

// Tensor-product oracle ops for the degeneration checks.
LinOp tensor_mult(const Mha& A, const Mha& B) {
  Shape abab{A.base[0], B.base[0], A.base[0], B.base[0]};
  LinOp mA2 = leg_apply(A.mult, {1, 3}, abab);      // A B B
  LinOp mB2 = leg_apply(B.mult, {2, 3}, mA2.out_shape());
  return compose(mB2, mA2);
}

// Componentwise coproduct sliced through the smash product:
// x (x) x' -> sum (a1 (x) b1) (x) ((a2 (x) b2) * x').
LinOp tensor_T1(const Mha& A, const Mha& B, const LinOp& smash) {
  Shape abab{A.base[0], B.base[0], A.base[0], B.base[0]};
  LinOp copA = *A.coproduct, copB = *B.coproduct;
  return LinOp("tensor-T1", abab, abab, [=](const Word& w) {
    Vec out(abab);
    for (Vec da = copA.apply_basis({w[0]}); const auto& [aw, ac] : da.support()) {
      for (Vec db = copB.apply_basis({w[1]}); const auto& [bw, bc] : db.support()) {
        Vec p = smash.apply_basis({aw[1], bw[1], w[2], w[3]});
        for (const auto& [pw, pc] : p.support())
          out.add_term({aw[0], bw[0], pw[0], pw[1]}, ac * bc * pc);
      }
    }
    return out;
  });
}

bool action_is_trivial(const RightAction& act, const ProbeSet& probes) {
  RightAction triv = trivial_action(act.A, act.B);
  ProbeSet light = probes;
  if (light.mode == ProbeSet::Mode::Exhaustive) light = ProbeSet::automatic(3, 50, 2000);
  auto p = light.vectors(act.ba());
  return !op_mismatch(act.act, triv.act, p).has_value();
}

bool coaction_is_trivial(const LeftCoaction& co, const ProbeSet& probes) {
  LeftCoaction triv = trivial_coaction(co.B, co.A);
  ProbeSet light = probes;
  if (light.mode == ProbeSet::Mode::Exhaustive) light = ProbeSet::automatic(3, 50, 2000);
  auto p = light.vectors(co.ab());
  return !op_mismatch(co.T, triv.T, p).has_value();
}

Report special_cases_report(const MatchedPairModel& model,
                            const std::optional<Bicrossproduct>& ab, const ProbeSet& probes) {
  Report rep;
  rep.suite = "special-cases";
  const auto& act = model.act;
  const auto& coact = model.coact;

  if (ab) {
    if (action_is_trivial(act, probes)) {
      rep.checks.push_back(check_ops_equal(
          "trivial-action-structure-constants",
          "trivial action: smash product = tensor product algebra", ab->AB->mult,
          tensor_mult(*act.A, *act.B), probes));
    } else {
      rep.checks.push_back(
          CheckResult::skipped("trivial-action-structure-constants",
                               "trivial action: smash product = tensor product algebra",
                               "action is not trivial on this instance"));
    }
    if (!coaction_is_trivial(coact, probes)) {
      rep.checks.push_back(
          CheckResult::skipped("trivial-coaction-coproduct",
                               "trivial coaction: D# slices = componentwise coproduct slices",
                               "coaction is not trivial on this instance"));
    } else if (!act.A->coproduct || !act.B->coproduct) {
      rep.checks.push_back(
          CheckResult::skipped("trivial-coaction-coproduct",
                               "trivial coaction: D# slices = componentwise coproduct slices",
                               "needs total coproducts on both constituents"));
    } else {
      rep.checks.push_back(check_ops_equal(
          "trivial-coaction-coproduct",
          "trivial coaction: D# slices = componentwise coproduct slices", ab->AB->T1,
          tensor_T1(*act.A, *act.B, ab->AB->mult), probes));
    }
  }

  {
    // Nonunital character of B: no element acts as a two-sided unit on a
    // spanning probe set. Local units exist, a global one must not.
    const auto& B = *act.B;
    const std::string law = "no two-sided unit in a nonunital B";
    if (B.unit) {
      rep.checks.push_back(
          CheckResult::skipped("nonunital-character", law, "B is unital on this instance"));
    } else {
      ProbeSet light = probes.mode == ProbeSet::Mode::Exhaustive ? ProbeSet::random(11, 50)
                                                                 : probes;
      auto candidates = light.vectors(B.one());
      std::optional<Counterexample> cex;
      std::mt19937_64 rng(light.seed + 99);
      for (const auto& u : candidates) {
        // Any candidate with finite support fails to fix some basis word
        // outside its support; find a witness.
        bool refuted = false;
        for (int tries = 0; tries < 64 && !refuted; ++tries) {
          Word w = random_word(B.one(), rng);
          Vec y = Vec::basis(B.one(), w);
          if (B.mult.apply(tensor(u, y)) != y || B.mult.apply(tensor(y, u)) != y)
            refuted = true;
        }
        if (!refuted) {
          cex = Counterexample{u.describe(), "acts as a unit on all sampled elements",
                               "expected a witness y with u*y != y"};
          break;
        }
      }
      if (cex)
        rep.checks.push_back(
            CheckResult::fail("nonunital-character", law, std::move(*cex), candidates.size()));
      else
        rep.checks.push_back(
            CheckResult::pass("nonunital-character", law, candidates.size()));
    }
  }
  return rep;
}

}  // namespace

PipelineResult full_pipeline(const MatchedPairModel& model, const ProbeSet& probes,
                             const VerifierOptions& opt) {
  PipelineResult result;
  auto& reports = result.bundle.reports;

  auto gate = [&](bool ok) {
    if (!ok && !opt.force) {
      result.stopped_early = true;
      return false;
    }
    return true;
  };

  {
    Report r = check_matched_pair(model.mp, probes);
    bool ok = r.all_pass();
    reports.push_back(std::move(r));
    if (!gate(ok)) return result;
  }
  {
    Report r = check_module_algebra(model.act, probes);
    r.subject = model.act.B->name + " <| " + model.act.A->name;
    Report r2 = check_module_algebra_dual(model.dual_act, probes);
    r2.subject = model.dual_act.D->name + " |> " + model.dual_act.C->name;
    bool ok = r.all_pass() && r2.all_pass();
    reports.push_back(std::move(r));
    reports.push_back(std::move(r2));
    if (!gate(ok)) return result;
  }
  {
    Report r = check_comodule_coalgebra(model.coact, probes);
    r.subject = model.coact.B->name + " coacting on " + model.coact.A->name;
    Report r2 = check_comodule_coalgebra_dual(model.dual_coact, probes);
    r2.subject = model.dual_coact.C->name + " coacting on " + model.dual_coact.D->name;
    bool ok = r.all_pass() && r2.all_pass();
    reports.push_back(std::move(r));
    reports.push_back(std::move(r2));
    if (!gate(ok)) return result;
  }
  {
    Report r = check_coaction_finiteness(model.coact, probes);
    r.subject = model.coact.B->name + " coacting on " + model.coact.A->name;
    Report r2 = check_coaction_finiteness_dual(model.dual_coact, probes);
    r2.subject = model.dual_coact.C->name + " coacting on " + model.dual_coact.D->name;
    bool ok = r.all_pass() && r2.all_pass();
    reports.push_back(std::move(r));
    reports.push_back(std::move(r2));
    if (!gate(ok)) return result;
  }
  {
    Report r = check_compat_conditions(model.act, model.coact, probes);
    bool ok = r.all_pass();
    reports.push_back(std::move(r));
    if (!gate(ok)) return result;
  }
  {
    Report r = check_compat_conditions_dual(model.dual_act, model.dual_coact, probes);
    bool ok = r.all_pass();
    reports.push_back(std::move(r));
    if (!gate(ok)) return result;
  }

  // Constituent algebras.
  for (const MhaPtr& m : {model.act.A, model.act.B, model.dual_act.C, model.dual_act.D}) {
    Report r = verify_mha(*m, probes);
    r.subject = m->name;
    bool ok = r.all_pass();
    regroup(std::move(r), reports);
    if (!gate(ok)) return result;
  }

  // AB.
  try {
    result.ab = build_bicrossproduct(model.act, model.coact, probes, true);
  } catch (const std::exception& e) {
    Report r;
    r.suite = "mha-axioms";
    r.subject = "AB";
    r.checks.push_back(CheckResult::fail(
        "associativity", "bicrossproduct construction",
        Counterexample{"build_bicrossproduct", e.what(), "a built structure"}));
    reports.push_back(std::move(r));
    result.stopped_early = true;
    return result;
  }
  {
    Report r = verify_mha(*result.ab->AB, probes);
    r.subject = result.ab->AB->name;
    Report r2 = check_bicross_consistency(*result.ab, probes);
    r2.subject = result.ab->AB->name;
    for (auto& c : r2.checks) r.checks.push_back(std::move(c));
    bool ok = r.all_pass();
    regroup(std::move(r), reports);
    if (!gate(ok)) return result;
  }

  // CD.
  try {
    result.cd = build_dual_bicrossproduct(model.dual_act, model.dual_coact, probes, true);
  } catch (const std::exception& e) {
    Report r;
    r.suite = "mha-axioms";
    r.subject = "CD";
    r.checks.push_back(CheckResult::fail(
        "associativity", "dual bicrossproduct construction",
        Counterexample{"build_dual_bicrossproduct", e.what(), "a built structure"}));
    reports.push_back(std::move(r));
    result.stopped_early = true;
    return result;
  }
  {
    Report r = verify_mha(*result.cd->CD, probes);
    r.subject = result.cd->CD->name;
    Report r2 = check_bicross_consistency_dual(*result.cd, probes);
    r2.subject = result.cd->CD->name;
    for (auto& c : r2.checks) r.checks.push_back(std::move(c));
    bool ok = r.all_pass();
    regroup(std::move(r), reports);
    if (!gate(ok)) return result;
  }

  if (opt.star_checks) {
    Report r;
    r.suite = "star-structure";
    r.subject = "action and coaction";
    r.checks.push_back(check_action_star(model.act, probes));
    r.checks.push_back(check_coaction_star(model.coact, probes));
    r.checks.push_back(check_action_star_dual(model.dual_act, probes));
    r.checks.push_back(check_coaction_star_dual(model.dual_coact, probes));
    r.checks.push_back(check_positivity(*result.ab->AB, probes));
    bool ok = r.all_pass();
    reports.push_back(std::move(r));
    if (!gate(ok)) return result;
  }

  {
    Report r;
    r.suite = "duality";
    r.subject = "base pairings";
    Pairing ac = canonical_pairing(model.act.A, model.dual_act.C);
    Report rac = check_pairing(ac, *model.act.A, *model.dual_act.C, probes);
    for (auto& c : rac.checks) r.checks.push_back(std::move(c));
    Pairing db = canonical_pairing(model.dual_act.D, model.act.B);
    Report rdb = check_pairing(db, *model.dual_act.D, *model.act.B, probes);
    for (auto& c : rdb.checks) r.checks.push_back(std::move(c));
    Report rabcd = check_pairing(bicross_pairing(*result.ab, *result.cd), *result.ab->AB,
                                 *result.cd->CD, probes);
    rabcd.subject = "AB with CD";
    bool ok = r.all_pass() && rabcd.all_pass();
    reports.push_back(std::move(r));
    reports.push_back(std::move(rabcd));
    if (!gate(ok)) return result;
  }

  {
    Report r = special_cases_report(model, result.ab, probes);
    bool ok = r.all_pass();
    reports.push_back(std::move(r));
    if (!gate(ok)) return result;
  }

  return result;
}

std::vector<Report> run_suite(const std::string& name, const MatchedPairModel& model,
                              const ProbeSet& probes, const VerifierOptions& opt) {
  std::string canonical = resolve_suite_name(name);
  VerifierOptions forced = opt;
  forced.force = true;
  PipelineResult res = full_pipeline(model, probes, forced);
  std::vector<Report> out;
  for (auto& r : res.bundle.reports)
    if (r.suite == canonical) out.push_back(std::move(r));
  if (out.empty()) {
    Report r;
    r.suite = canonical;
    r.checks.push_back(CheckResult::skipped("suite", "", "no checks applicable"));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bicross
