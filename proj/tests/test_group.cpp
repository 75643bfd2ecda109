#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicross/group.hpp"

using namespace bicross;

namespace {

GroupPtr s3() {
  return make_perm_group("S3", 3,
                         {*perm_from_cycles("(1,2)", 3), *perm_from_cycles("(1,2,3)", 3)});
}

GroupPtr a5() {
  return make_perm_group("A5", 5,
                         {*perm_from_cycles("(1,2,3)", 5), *perm_from_cycles("(3,4,5)", 5)});
}

}  // namespace

TEST_CASE("composition convention: the right factor acts first") {
  auto p = *perm_from_cycles("(1,2)", 3);
  auto q = *perm_from_cycles("(1,2,3)", 3);
  // (1,2)(1,2,3) maps 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2.
  CHECK(perm_to_cycles(perm_compose(p, q)) == "(2,3)");
  CHECK(perm_to_cycles(perm_compose(q, p)) == "(1,3)");
  CHECK(perm_to_cycles(perm_inverse(q)) == "(1,3,2)");
  CHECK(perm_from_cycles("(1,2)(1,2)", 3).value() == perm_from_cycles("e", 3).value());
}

TEST_CASE("permutation group enumeration and parsing") {
  auto G = s3();
  CHECK(G->order() == 6);
  auto g = G->parse_element("(1,2,3)");
  REQUIRE(g.has_value());
  CHECK(G->format_element(*g) == "(1,2,3)");
  CHECK(G->mul(*g, G->inv(*g)) == G->identity());
  CHECK(!G->parse_element("(1,4)").has_value());
  CHECK(a5()->order() == 60);
}

TEST_CASE("group laws hold on all probes for every builtin family") {
  std::mt19937_64 rng(5);
  for (const auto& G : {s3(), make_integer_group(), make_dyadic_group(2),
                        make_semidirect_group(2), make_semidirect_group(3)}) {
    for (int i = 0; i < 60; ++i) {
      auto a = G->sample(rng), b = G->sample(rng), c = G->sample(rng);
      CHECK(G->mul(G->mul(a, b), c) == G->mul(a, G->mul(b, c)));
      CHECK(G->mul(a, G->identity()) == a);
      CHECK(G->mul(G->identity(), a) == a);
      CHECK(G->mul(a, G->inv(a)) == G->identity());
      CHECK(G->contains(a));
    }
  }
}

TEST_CASE("table group validation") {
  auto Z2 = make_table_group("Z2", {{0, 1}, {1, 0}});
  CHECK(Z2->order() == 2);
  CHECK(Z2->mul(GroupElement(uint32_t{1}), GroupElement(uint32_t{1})) == Z2->identity());

  CHECK_THROWS_AS(make_table_group("bad", {{0, 1}, {0, 1}}), GroupError);
  CHECK_THROWS_AS(make_table_group("bad", {{1, 0}, {1, 0}}), GroupError);
  CHECK_THROWS_AS(make_table_group("bad", {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}), GroupError);
}

TEST_CASE("table group from the S3 multiplication table matches the permutation group") {
  auto G = s3();
  const auto& elems = *G->enumeration();
  std::vector<std::vector<uint32_t>> table(6, std::vector<uint32_t>(6));
  auto index_of = [&](const GroupElement& g) {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == g) return static_cast<uint32_t>(i);
    FAIL("element not found");
    return uint32_t{0};
  };
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) table[i][j] = index_of(G->mul(elems[i], elems[j]));
  auto T = make_table_group("S3t", table);
  CHECK(T->order() == 6);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j)
      CHECK(T->mul(GroupElement(uint32_t(i)), GroupElement(uint32_t(j))) ==
            GroupElement(table[i][j]));
  for (uint32_t i = 0; i < 6; ++i) {
    GroupElement e{i};
    CHECK(T->parse_element(T->format_element(e)).value() == e);
  }
}

TEST_CASE("generated subgroups") {
  auto G = a5();
  auto K = make_subgroup_generated("A4", G,
                                   {GroupElement(*perm_from_cycles("(1,2,3)", 5)),
                                    GroupElement(*perm_from_cycles("(2,3,4)", 5))});
  auto H = make_subgroup_generated("C5", G,
                                   {GroupElement(*perm_from_cycles("(1,2,3,4,5)", 5))});
  CHECK(K->order() == 12);
  CHECK(H->order() == 5);
  CHECK(K->contains(*G->parse_element("(1,2)(3,4)")));
  CHECK(!K->contains(*G->parse_element("(1,2,3,4,5)")));
}

TEST_CASE("factorize: identity case and exhaustive search oracle on S3") {
  auto G = s3();
  auto K = make_subgroup_generated("A3", G, {GroupElement(*perm_from_cycles("(1,2,3)", 3))});
  auto H = make_subgroup("H", G, {G->identity(), *G->parse_element("(1,2)")});

  auto [k0, h0] = factorize(*K, *H, *G, G->identity());
  CHECK(k0 == G->identity());
  CHECK(h0 == G->identity());

  // g = (2,3) factors as (k, (1,2)) with k = (2,3)(1,2)^-1 in A3.
  auto g = *G->parse_element("(2,3)");
  auto [k, h] = factorize(*K, *H, *G, g);
  CHECK(h == *G->parse_element("(1,2)"));
  CHECK(k == G->mul(g, G->inv(*G->parse_element("(1,2)"))));

  // Independent oracle: exhaustive search over K x H finds exactly one
  // factorization of every element.
  for (const auto& x : *G->enumeration()) {
    int found = 0;
    for (const auto& kk : *K->enumeration())
      for (const auto& hh : *H->enumeration())
        if (G->mul(kk, hh) == x) ++found;
    CHECK(found == 1);
    auto [fk, fh] = factorize(*K, *H, *G, x);
    CHECK(G->mul(fk, fh) == x);
  }
}

TEST_CASE("factorize: A5 = A4 * C5 is exact, neither subgroup normal") {
  auto G = a5();
  auto K = make_subgroup_generated("A4", G,
                                   {GroupElement(*perm_from_cycles("(1,2,3)", 5)),
                                    GroupElement(*perm_from_cycles("(2,3,4)", 5))});
  auto H = make_subgroup_generated("C5", G,
                                   {GroupElement(*perm_from_cycles("(1,2,3,4,5)", 5))});
  for (const auto& x : *G->enumeration()) {
    auto [k, h] = factorize(*K, *H, *G, x);
    CHECK(G->mul(k, h) == x);
    CHECK(K->contains(k));
    CHECK(H->contains(h));
  }
  for (const auto& k : *K->enumeration())
    for (const auto& h : *H->enumeration()) {
      auto [k2, h2] = factorize(*K, *H, *G, G->mul(k, h));
      CHECK(k2 == k);
      CHECK(h2 == h);
    }
}

TEST_CASE("factorize failure modes carry the right diagnosis") {
  auto G = s3();
  auto K = make_subgroup_generated("A3", G, {GroupElement(*perm_from_cycles("(1,2,3)", 3))});
  auto E = make_subgroup("E", G, {G->identity()});
  CHECK_THROWS_AS(factorize(*K, *E, *G, *G->parse_element("(1,2)")), NoFactorization);
  auto full = make_subgroup("G2", G, *G->enumeration());
  auto H = make_subgroup("H", G, {G->identity(), *G->parse_element("(1,2)")});
  CHECK_THROWS_AS(factorize(*full, *H, *G, G->identity()), AmbiguousFactorization);
}

TEST_CASE("builtin infinite families") {
  auto Z = make_integer_group();
  CHECK(Z->identity() == GroupElement(Rat(0)));
  CHECK(Z->mul(*Z->parse_element("3"), *Z->parse_element("-5")) == *Z->parse_element("-2"));
  CHECK(!Z->contains(GroupElement(Rat(1, 2))));

  auto D = make_dyadic_group(2);
  CHECK(D->contains(GroupElement(Rat(3, 4))));
  CHECK(!D->contains(GroupElement(Rat(1, 3))));
  CHECK(D->parse_element("3/2").has_value());
  CHECK(!D->parse_element("1/6").has_value());

  auto S = make_semidirect_group(2);
  auto a = *S->parse_element("3/2|1");
  auto b = *S->parse_element("1|0");
  // (3/2, 1)(1, 0) = (3/2 + 2^1 * 1, 1) = (7/2, 1)
  CHECK(S->format_element(S->mul(a, b)) == "7/2|1");
  CHECK(S->mul(a, S->inv(a)) == S->identity());
  CHECK(S->parse_element(S->format_element(S->inv(a))).value() == S->inv(a));
}
