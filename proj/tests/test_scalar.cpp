#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicross/scalar.hpp"

#include <random>

using namespace bicross;

namespace {

Scalar rnd(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  return Scalar(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("field axioms on randomized probes") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    Scalar a = rnd(rng), b = rnd(rng), c = rnd(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Scalar::zero() == a);
    CHECK(a * Scalar::one() == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK(a * inverse(a) == Scalar::one());
      CHECK(a / a == Scalar::one());
    }
  }
}

TEST_CASE("conjugation is an involutive ring anti-automorphism fixing rationals") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar a = rnd(rng), b = rnd(rng);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
  Scalar r(Rat(3, 4));
  CHECK(r.conj() == r);
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar::i().conj() == Scalar(Rat(0), Rat(-1)));
}

TEST_CASE("canonical serialization round-trips bit-exactly") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    Scalar a = rnd(rng);
    auto parsed = parse_scalar(format_scalar(a));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == a);
    CHECK(format_scalar(*parsed) == format_scalar(a));
  }
  CHECK(format_scalar(Scalar::zero()) == "0");
  CHECK(format_scalar(Scalar(Rat(1, 2), Rat(-3, 5))) == "1/2-3/5*i");
  CHECK(format_scalar(Scalar(Rat(0), Rat(1))) == "i");
  CHECK(format_scalar(Scalar(Rat(0), Rat(-1))) == "-i");
  CHECK(format_scalar(Scalar(Rat(-2), Rat(1))) == "-2+i");
  CHECK(parse_scalar("5/10").value() == Scalar(Rat(1, 2)));
  CHECK(parse_scalar("3+i").value() == Scalar(Rat(3), Rat(1)));
  CHECK(parse_scalar("-1/2*i").value() == Scalar(Rat(0), Rat(-1, 2)));
  CHECK(!parse_scalar("").has_value());
  CHECK(!parse_scalar("1/0").has_value());
  CHECK(!parse_scalar("x").has_value());
}
