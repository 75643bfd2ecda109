#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicross/matched_pair.hpp"
#include "bicross/probes.hpp"
#include "bicross/report.hpp"

using namespace bicross;

namespace {

MatchedPair s3_pair() {
  auto G = make_perm_group("S3", 3,
                           {*perm_from_cycles("(1,2)", 3), *perm_from_cycles("(1,2,3)", 3)});
  auto K = make_subgroup_generated("A3", G, {GroupElement(*perm_from_cycles("(1,2,3)", 3))});
  auto H = make_subgroup("H", G, {G->identity(), *G->parse_element("(1,2)")});
  return matched_pair_from_factorization(G, K, H);
}

CheckResult find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("check not found: ", name);
  return {};
}

}  // namespace

TEST_CASE("normal K forces conjugation: h|>k = hkh^-1 and h<|k = h") {
  MatchedPair mp = s3_pair();
  const auto& G = *mp.source->G;
  for (const auto& h : *mp.H->enumeration())
    for (const auto& k : *mp.K->enumeration()) {
      CHECK(mp.tr(h, k) == G.mul(G.mul(h, k), G.inv(h)));
      CHECK(mp.tl(h, k) == h);
    }
}

TEST_CASE("all six identities pass exhaustively on the S3 pair") {
  Report r = check_matched_pair(s3_pair(), ProbeSet::exhaustive());
  CHECK(r.all_pass());
  CHECK(r.checks.size() == 7);  // six identities + source consistency
  for (const auto& c : r.checks) CHECK(c.cases > 0);
}

TEST_CASE("builtin semidirect family: closed forms and 200 random probes") {
  MatchedPair mp = builtin_matched_pair_zmz(2);
  // h = 1, k = 3/2: h |> k = 2^1 * 3/2 = 3 and h <| k = 1.
  GroupElement h(Rat(1)), k(Rat(3, 2));
  CHECK(mp.tr(h, k) == GroupElement(Rat(3)));
  CHECK(mp.tl(h, k) == h);

  Report r = check_matched_pair(mp, ProbeSet::random(17, 200));
  CHECK(r.all_pass());

  MatchedPair sw = builtin_matched_pair_zmz(2, true);
  // Swapped roles: the normal factor moves; h <| k = 2^-k h.
  GroupElement hs(Rat(3, 2)), ks(Rat(2));
  CHECK(sw.tr(hs, ks) == ks);
  CHECK(sw.tl(hs, ks) == GroupElement(Rat(3, 8)));
  Report r2 = check_matched_pair(sw, ProbeSet::random(17, 200));
  CHECK(r2.all_pass());
}

TEST_CASE("trivial pair satisfies everything") {
  auto G = make_perm_group("S3", 3,
                           {*perm_from_cycles("(1,2)", 3), *perm_from_cycles("(1,2,3)", 3)});
  MatchedPair mp = trivial_matched_pair(G, G);
  Report r = check_matched_pair(mp, ProbeSet::exhaustive());
  CHECK(r.all_pass());
}

TEST_CASE("one corrupted value fails with that counterexample") {
  MatchedPair good = s3_pair();
  std::map<std::pair<GroupElement, GroupElement>, GroupElement> tr_table, tl_table;
  for (const auto& h : *good.H->enumeration())
    for (const auto& k : *good.K->enumeration()) {
      tr_table[{h, k}] = good.tr(h, k);
      tl_table[{h, k}] = good.tl(h, k);
    }
  // Corrupt tr at one point: swap the images of the two 3-cycles under (1,2).
  GroupElement h12 = *good.H->enumeration()->rbegin().base().base() ==
                             GroupElement()  // silence unused warning path
                         ? good.H->identity()
                         : good.H->identity();
  (void)h12;
  auto G = good.source->G;
  GroupElement flip = *G->parse_element("(1,2)");
  GroupElement c3 = *G->parse_element("(1,2,3)");
  GroupElement c3i = *G->parse_element("(1,3,2)");
  tr_table[{flip, c3}] = c3;  // should be (1,3,2)

  MatchedPair bad = matched_pair_explicit(good.H, good.K, tr_table, tl_table);
  Report r = check_matched_pair(bad, ProbeSet::exhaustive());
  CHECK(!r.all_pass());
  bool found_cex = false;
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::Fail && c.cex) {
      found_cex = true;
      CHECK(!c.cex->input.empty());
      CHECK(!c.cex->lhs.empty());
      CHECK(!c.cex->rhs.empty());
    }
  CHECK(found_cex);
  (void)c3i;
}

TEST_CASE("explicit pairs must be total and land in the right groups") {
  MatchedPair good = s3_pair();
  std::map<std::pair<GroupElement, GroupElement>, GroupElement> tr_table, tl_table;
  CHECK_THROWS_AS(matched_pair_explicit(good.H, good.K, tr_table, tl_table), GroupError);
}
