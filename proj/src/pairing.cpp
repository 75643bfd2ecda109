#include "bicross/pairing.hpp"

#include "bicross/parallel.hpp"

namespace bicross {

Scalar Pairing::eval(const Vec& x, const Vec& f) const {
  if (!shape_equal(x.shape(), left_shape) || !shape_equal(f.shape(), right_shape))
    throw ShapeMismatch("pairing " + name + ": shape mismatch");
  Scalar out;
  for (const auto& [xw, xc] : x.support())
    for (const auto& [fw, fc] : f.support()) out += xc * fc * on_basis(xw, fw);
  return out;
}

Pairing canonical_pairing(const MhaPtr& grp_alg, const MhaPtr& fun_alg) {
  if (grp_alg->base.size() != 1 || fun_alg->base.size() != 1 ||
      grp_alg->base[0].kind != BasisKind::GroupLike ||
      fun_alg->base[0].kind != BasisKind::Delta ||
      grp_alg->base[0].group != fun_alg->base[0].group)
    throw PairingMismatch("canonical pairing needs CH and F(H) over the same group");
  return Pairing{"<CH,F(H)>", grp_alg->one(), fun_alg->one(),
                 [](const Word& x, const Word& f) {
                   return x[0] == f[0] ? Scalar::one() : Scalar::zero();
                 }};
}

Pairing bicross_pairing(const Bicrossproduct& ab, const DualBicrossproduct& cd) {
  const auto& la = ab.A->base[0];
  const auto& lb = ab.B->base[0];
  const auto& lc = cd.C->base[0];
  const auto& ld = cd.D->base[0];
  if (la.kind != BasisKind::GroupLike || lc.kind != BasisKind::Delta ||
      la.group != lc.group || lb.kind != BasisKind::Delta ||
      ld.kind != BasisKind::GroupLike || lb.group != ld.group)
    throw PairingMismatch("bicross pairing needs AB and CD from the same matched pair");
  return Pairing{"<AB,CD>", ab.AB->one(), cd.CD->one(),
                 [](const Word& x, const Word& z) {
                   return (x[0] == z[0] && x[1] == z[1]) ? Scalar::one() : Scalar::zero();
                 }};
}

namespace {

using WordEval = std::function<std::pair<Scalar, Scalar>(const Word&)>;

// Runs a per-word two-sided scalar comparison over a domain, exhaustively
// when affordable and via seeded random words otherwise.
CheckResult word_check(std::string name, std::string law, const Shape& dom,
                       const ProbeSet& probes, uint64_t salt, const WordEval& eval) {
  auto report_fail = [&](const Word& w, size_t cases) {
    auto [lhs, rhs] = eval(w);
    return CheckResult::fail(
        std::move(name), std::move(law),
        Counterexample{format_word(dom, w), format_scalar(lhs), format_scalar(rhs)}, cases);
  };
  auto dim = shape_dimension(dom);
  if (dim && probes.wants_exhaustive(*dim)) {
    auto bad = scan_first_failure(*dim, [&](size_t i) {
      auto [lhs, rhs] = eval(word_at(dom, i));
      return lhs == rhs;
    });
    if (bad) return report_fail(word_at(dom, *bad), *dim);
    return CheckResult::pass(std::move(name), std::move(law), *dim, "exhaustive");
  }
  std::mt19937_64 rng(probes.seed + salt);
  for (size_t i = 0; i < probes.count; ++i) {
    Word w = random_word(dom, rng);
    auto [lhs, rhs] = eval(w);
    if (lhs != rhs) return report_fail(w, probes.count);
  }
  return CheckResult::pass(std::move(name), std::move(law), probes.count);
}

}  // namespace

Report check_pairing(const Pairing& p, const Mha& left, const Mha& right,
                     const ProbeSet& probes) {
  Report rep;
  rep.suite = "duality";
  const Shape lx = left.one(), rx = right.one();
  const size_t nl = lx.size(), nr = rx.size();

  if (!right.coproduct) {
    rep.checks.push_back(CheckResult::skipped("pairing-product-coproduct",
                                              "<xy, f> = sum <x, f1><y, f2>",
                                              "right side exposes no total coproduct"));
  } else {
    Shape dom = shape_concat(shape_concat(lx, lx), rx);
    rep.checks.push_back(word_check(
        "pairing-product-coproduct", "<xy, f> = sum <x, f1><y, f2>", dom, probes, 0,
        [&, nl](const Word& w) {
          Word xw(w.begin(), w.begin() + nl);
          Word yw(w.begin() + nl, w.begin() + 2 * nl);
          Word fw(w.begin() + 2 * nl, w.end());
          Word both = xw;
          both.insert(both.end(), yw.begin(), yw.end());
          Scalar lhs;
          for (Vec tv3_ = left.mult.apply_basis(both); const auto& [mw, mc] : tv3_.support())
            lhs += mc * p.on_basis(mw, fw);
          Scalar rhs;
          for (Vec tv4_ = right.coproduct->apply_basis(fw); const auto& [dw, dc] : tv4_.support()) {
            Word f1(dw.begin(), dw.begin() + nr);
            Word f2(dw.begin() + nr, dw.end());
            rhs += dc * p.on_basis(xw, f1) * p.on_basis(yw, f2);
          }
          return std::pair{lhs, rhs};
        }));
  }

  if (!left.coproduct) {
    rep.checks.push_back(CheckResult::skipped("pairing-coproduct-product",
                                              "<x, fg> = sum <x1, f><x2, g>",
                                              "left side exposes no total coproduct"));
  } else {
    Shape dom = shape_concat(lx, shape_concat(rx, rx));
    rep.checks.push_back(word_check(
        "pairing-coproduct-product", "<x, fg> = sum <x1, f><x2, g>", dom, probes, 1,
        [&, nl, nr](const Word& w) {
          Word xw(w.begin(), w.begin() + nl);
          Word fw(w.begin() + nl, w.begin() + nl + nr);
          Word gw(w.begin() + nl + nr, w.end());
          Word both = fw;
          both.insert(both.end(), gw.begin(), gw.end());
          Scalar lhs;
          for (Vec tv5_ = right.mult.apply_basis(both); const auto& [mw, mc] : tv5_.support())
            lhs += mc * p.on_basis(xw, mw);
          Scalar rhs;
          for (Vec tv6_ = left.coproduct->apply_basis(xw); const auto& [dw, dc] : tv6_.support()) {
            Word x1(dw.begin(), dw.begin() + nl);
            Word x2(dw.begin() + nl, dw.end());
            rhs += dc * p.on_basis(x1, fw) * p.on_basis(x2, gw);
          }
          return std::pair{lhs, rhs};
        }));
  }

  {
    Shape dom = shape_concat(lx, rx);
    rep.checks.push_back(
        word_check("pairing-antipode", "<S(x), f> = <x, S(f)>", dom, probes, 2,
                   [&, nl](const Word& w) {
                     Word xw(w.begin(), w.begin() + nl);
                     Word fw(w.begin() + nl, w.end());
                     Scalar lhs;
                     for (Vec tv7_ = left.antipode.apply_basis(xw); const auto& [sw, sc] : tv7_.support())
                       lhs += sc * p.on_basis(sw, fw);
                     Scalar rhs;
                     for (Vec tv8_ = right.antipode.apply_basis(fw); const auto& [sw, sc] : tv8_.support())
                       rhs += sc * p.on_basis(xw, sw);
                     return std::pair{lhs, rhs};
                   }));
  }
  return rep;
}

}  // namespace bicross
