#include "bicross/matched_pair.hpp"

#include "bicross/probes.hpp"
#include "bicross/report.hpp"

#include <sstream>

namespace bicross {

std::string MatchedPair::describe() const {
  return "matched pair (K=" + K->name() + ", H=" + H->name() + ")";
}

MatchedPair matched_pair_from_factorization(GroupPtr G, GroupPtr K, GroupPtr H) {
  const auto* gall = G->enumeration();
  if (!gall) throw GroupError("matched pair derivation requires a finite parent group");
  // Exact factorization precheck: every element of G splits uniquely.
  for (const auto& g : *gall) factorize(*K, *H, *G, g);

  auto tr_table = std::make_shared<std::map<std::pair<GroupElement, GroupElement>, GroupElement>>();
  auto tl_table = std::make_shared<std::map<std::pair<GroupElement, GroupElement>, GroupElement>>();
  for (const auto& h : *H->enumeration()) {
    for (const auto& k : *K->enumeration()) {
      auto [k2, h2] = factorize(*K, *H, *G, G->mul(h, k));
      (*tr_table)[{h, k}] = k2;
      (*tl_table)[{h, k}] = h2;
    }
  }

  MatchedPair mp;
  mp.H = H;
  mp.K = K;
  mp.tr = [tr_table](const GroupElement& h, const GroupElement& k) {
    return tr_table->at({h, k});
  };
  mp.tl = [tl_table](const GroupElement& h, const GroupElement& k) {
    return tl_table->at({h, k});
  };
  mp.source = MatchedPair::Source{G, [](const GroupElement& h) { return h; },
                                  [](const GroupElement& k) { return k; }};
  return mp;
}

MatchedPair matched_pair_explicit(
    GroupPtr H, GroupPtr K,
    std::map<std::pair<GroupElement, GroupElement>, GroupElement> tr_table,
    std::map<std::pair<GroupElement, GroupElement>, GroupElement> tl_table) {
  if (!H->finite() || !K->finite())
    throw GroupError("explicit matched pair requires finite groups");
  for (const auto& h : *H->enumeration()) {
    for (const auto& k : *K->enumeration()) {
      if (!tr_table.count({h, k}))
        throw GroupError("explicit matched pair: missing tr " + H->format_element(h) + " " +
                         K->format_element(k));
      if (!tl_table.count({h, k}))
        throw GroupError("explicit matched pair: missing tl " + H->format_element(h) + " " +
                         K->format_element(k));
      if (!K->contains(tr_table.at({h, k})))
        throw GroupError("explicit matched pair: tr image outside K");
      if (!H->contains(tl_table.at({h, k})))
        throw GroupError("explicit matched pair: tl image outside H");
    }
  }
  auto trp = std::make_shared<decltype(tr_table)>(std::move(tr_table));
  auto tlp = std::make_shared<decltype(tl_table)>(std::move(tl_table));
  MatchedPair mp;
  mp.H = std::move(H);
  mp.K = std::move(K);
  mp.tr = [trp](const GroupElement& h, const GroupElement& k) { return trp->at({h, k}); };
  mp.tl = [tlp](const GroupElement& h, const GroupElement& k) { return tlp->at({h, k}); };
  return mp;
}

MatchedPair builtin_matched_pair_zmz(unsigned m, bool swapped) {
  auto G = make_semidirect_group(m);
  MatchedPair mp;
  if (!swapped) {
    // K = Z[1/m] is normal: h |> k = m^h k, h <| k = h.
    mp.H = make_integer_group("Z");
    mp.K = make_dyadic_group(m);
    Rat base(m);
    mp.tr = [base](const GroupElement& h, const GroupElement& k) {
      Int n = numerator(h.rat());
      Rat p(1);
      Int e = n >= 0 ? n : Int(-n);
      Rat b = base;
      while (e > 0) {
        if (e % 2 == 1) p *= b;
        b *= b;
        e /= 2;
      }
      if (n < 0) p = Rat(1) / p;
      return GroupElement(p * k.rat());
    };
    mp.tl = [](const GroupElement& h, const GroupElement&) { return h; };
    mp.source = MatchedPair::Source{
        G, [](const GroupElement& h) { return GroupElement(SemiElem{Rat(0), numerator(h.rat())}); },
        [](const GroupElement& k) { return GroupElement(SemiElem{k.rat(), Int(0)}); }};
  } else {
    // Roles swapped: H = Z[1/m] is normal, so the action is trivial and
    // the other map twists: h |> k = k, h <| k = m^(-k) h.
    mp.H = make_dyadic_group(m);
    mp.K = make_integer_group("Z");
    Rat base(m);
    mp.tr = [](const GroupElement&, const GroupElement& k) { return k; };
    mp.tl = [base](const GroupElement& h, const GroupElement& k) {
      Int n = -numerator(k.rat());
      Rat p(1);
      Int e = n >= 0 ? n : Int(-n);
      Rat b = base;
      while (e > 0) {
        if (e % 2 == 1) p *= b;
        b *= b;
        e /= 2;
      }
      if (n < 0) p = Rat(1) / p;
      return GroupElement(p * h.rat());
    };
    mp.source = MatchedPair::Source{
        G, [](const GroupElement& h) { return GroupElement(SemiElem{h.rat(), Int(0)}); },
        [](const GroupElement& k) { return GroupElement(SemiElem{Rat(0), numerator(k.rat())}); }};
  }
  return mp;
}

MatchedPair trivial_matched_pair(GroupPtr H, GroupPtr K) {
  MatchedPair mp;
  mp.H = std::move(H);
  mp.K = std::move(K);
  mp.tr = [](const GroupElement&, const GroupElement& k) { return k; };
  mp.tl = [](const GroupElement& h, const GroupElement&) { return h; };
  return mp;
}

namespace {

struct TripleCheck {
  std::string name;
  std::string law;
  std::vector<GroupPtr> spaces;
  // Returns (lhs, rhs, which group formats them).
  std::function<std::pair<GroupElement, GroupElement>(const std::vector<GroupElement>&)> eval;
  const Group* value_group;
};

std::string format_tuple(const MatchedPair& mp, const std::vector<GroupPtr>& spaces,
                         const std::vector<GroupElement>& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += spaces[i]->format_element(t[i]);
  }
  (void)mp;
  return out + ")";
}

}  // namespace

Report check_matched_pair(const MatchedPair& mp, const ProbeSet& probes) {
  Report rep;
  rep.suite = "matched-pair";
  const auto& H = mp.H;
  const auto& K = mp.K;

  std::vector<TripleCheck> checks;
  checks.push_back({"unit-laws-tr",
                    "e|>k = k  and  h|>e = e",
                    {H, K},
                    [&](const std::vector<GroupElement>& t) {
                      GroupElement lhs = mp.tr(H->identity(), t[1]);
                      if (!(lhs == t[1])) return std::pair{lhs, t[1]};
                      GroupElement lhs2 = mp.tr(t[0], K->identity());
                      return std::pair{lhs2, K->identity()};
                    },
                    K.get()});
  checks.push_back({"unit-laws-tl",
                    "h<|e = h  and  e<|k = e",
                    {H, K},
                    [&](const std::vector<GroupElement>& t) {
                      GroupElement lhs = mp.tl(t[0], K->identity());
                      if (!(lhs == t[0])) return std::pair{lhs, t[0]};
                      GroupElement lhs2 = mp.tl(H->identity(), t[1]);
                      return std::pair{lhs2, H->identity()};
                    },
                    H.get()});
  checks.push_back({"tr-is-action",
                    "(hh')|>k = h|>(h'|>k)",
                    {H, H, K},
                    [&](const std::vector<GroupElement>& t) {
                      return std::pair{mp.tr(H->mul(t[0], t[1]), t[2]),
                                       mp.tr(t[0], mp.tr(t[1], t[2]))};
                    },
                    K.get()});
  checks.push_back({"tl-is-action",
                    "h<|(kk') = (h<|k)<|k'",
                    {H, K, K},
                    [&](const std::vector<GroupElement>& t) {
                      return std::pair{mp.tl(t[0], K->mul(t[1], t[2])),
                                       mp.tl(mp.tl(t[0], t[1]), t[2])};
                    },
                    H.get()});
  checks.push_back({"tl-product-twist",
                    "(hh')<|k = (h<|(h'|>k))(h'<|k)",
                    {H, H, K},
                    [&](const std::vector<GroupElement>& t) {
                      return std::pair{
                          mp.tl(H->mul(t[0], t[1]), t[2]),
                          H->mul(mp.tl(t[0], mp.tr(t[1], t[2])), mp.tl(t[1], t[2]))};
                    },
                    H.get()});
  checks.push_back({"tr-product-twist",
                    "h|>(kk') = (h|>k)((h<|k)|>k')",
                    {H, K, K},
                    [&](const std::vector<GroupElement>& t) {
                      return std::pair{
                          mp.tr(t[0], K->mul(t[1], t[2])),
                          K->mul(mp.tr(t[0], t[1]), mp.tr(mp.tl(t[0], t[1]), t[2]))};
                    },
                    K.get()});

  for (const auto& chk : checks) {
    auto tuples = probes.group_tuples(chk.spaces);
    std::optional<Counterexample> cex;
    for (const auto& t : tuples) {
      auto [lhs, rhs] = chk.eval(t);
      if (!(lhs == rhs)) {
        cex = Counterexample{format_tuple(mp, chk.spaces, t),
                             chk.value_group->format_element(lhs),
                             chk.value_group->format_element(rhs),
                             {},
                             {}};
        break;
      }
    }
    if (cex)
      rep.checks.push_back(CheckResult::fail(chk.name, chk.law, std::move(*cex), tuples.size()));
    else
      rep.checks.push_back(CheckResult::pass(chk.name, chk.law, tuples.size()));
  }

  if (mp.source) {
    auto tuples = probes.group_tuples({H, K});
    std::optional<Counterexample> cex;
    for (const auto& t : tuples) {
      const auto& G = *mp.source->G;
      GroupElement lhs = G.mul(mp.source->embed_h(t[0]), mp.source->embed_k(t[1]));
      GroupElement rhs = G.mul(mp.source->embed_k(mp.tr(t[0], t[1])),
                               mp.source->embed_h(mp.tl(t[0], t[1])));
      if (!(lhs == rhs)) {
        cex = Counterexample{format_tuple(mp, {H, K}, t), G.format_element(lhs),
                             G.format_element(rhs)};
        break;
      }
      // Round trip: refactorizing k*h must return the same pair.
      GroupElement kh = G.mul(mp.source->embed_k(t[1]), mp.source->embed_h(t[0]));
      if (G.enumeration()) {
        auto [k2, h2] = factorize(*K, *H, G, kh);
        if (!(k2 == t[1] && h2 == t[0])) {
          cex = Counterexample{format_tuple(mp, {H, K}, t),
                               "(" + K->format_element(k2) + ", " + H->format_element(h2) + ")",
                               "(" + K->format_element(t[1]) + ", " + H->format_element(t[0]) +
                                   ")"};
          break;
        }
      }
    }
    if (cex)
      rep.checks.push_back(CheckResult::fail("source-consistency",
                                             "hk = (h|>k)(h<|k) in G; factorize(kh) = (k,h)",
                                             std::move(*cex), tuples.size()));
    else
      rep.checks.push_back(CheckResult::pass("source-consistency",
                                             "hk = (h|>k)(h<|k) in G; factorize(kh) = (k,h)",
                                             tuples.size()));
  }

  return rep;
}

}  // namespace bicross
