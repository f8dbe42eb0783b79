#include <random>

#include "doctest.h"
#include "vassiliev/brauer.hpp"

using namespace vassiliev;

namespace {

BrMatching random_matching(int k, std::mt19937& rng) {
  std::vector<int> pts(2 * k);
  for (int i = 0; i < 2 * k; ++i) pts[i] = i;
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(pts[2 * i], pts[2 * i + 1]);
  return BrMatching(k, std::move(pairs));
}

}  // namespace

TEST_SUITE("brauer") {

TEST_CASE("matching construction and rendering") {
  auto m = BrMatching::of(2, {{{1, false}, {2, false}}, {{1, true}, {2, true}}});
  CHECK(m.str() == "{t1-t2,b1-b2}");
  CHECK(BrMatching::identity(2).str() == "{t1-b1,t2-b2}");
  CHECK_THROWS_AS(BrMatching(2, {{0, 1}, {0, 3}}), std::invalid_argument);
}

TEST_CASE("Br2 relations") {
  auto el = named_elements(2);
  const BrElement &a = el.at("a"), &b = el.at("b"), &one = el.at("1");
  CHECK(a * a == a * Poly::c());
  CHECK(b * b == one);
  CHECK(a * b == a);
  CHECK(b * a == a);
  CHECK(one.trace() == Poly::monomial(2));
  CHECK(a.trace() == Poly::c());
  CHECK(b.trace() == Poly::c());
}

TEST_CASE("mul associativity on random basis elements") {
  std::mt19937 rng(2024);
  for (int k = 2; k <= 4; ++k)
    for (int trial = 0; trial < 20; ++trial) {
      BrElement a(random_matching(k, rng));
      BrElement b(random_matching(k, rng));
      BrElement c(random_matching(k, rng));
      CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("trace is symmetric") {
  std::mt19937 rng(55);
  for (int k = 2; k <= 4; ++k)
    for (int trial = 0; trial < 20; ++trial) {
      BrElement a(random_matching(k, rng));
      BrElement b(random_matching(k, rng));
      CHECK((a * b).trace() == (b * a).trace());
    }
}

TEST_CASE("Br3 identity battery") {
  auto el = named_elements(3);
  BrElement u = el.at("u+") - el.at("u-");
  BrElement x = el.at("x+") - el.at("x-");
  CHECK(el.at("u+") == el.at("d"));
  CHECK((u + x) * u == u * (Poly::c() - Poly(Rational(1)) - Poly(Rational(1))));
  BrElement x2 = x * x;
  CHECK(x2 * x == x2 + x * Poly(Rational(2)));
  Poly target = Poly::monomial(2) - Poly::monomial(1);
  CHECK(x2.trace() == (Poly::c() - Poly(Rational(1))) * target);
  CHECK(x.trace() * Rational(-1) == target);
  CHECK(u.trace() == target);
  CHECK((u * x).trace() * Rational(-1) == target);
  CHECK((u * x2).trace() == target);
}

TEST_CASE("powers") {
  auto el = named_elements(3);
  BrElement dmh = el.at("d") - el.at("h");
  CHECK(dmh.pow(0) == BrElement::identity(3));
  CHECK(dmh.pow(2).trace() ==
        Poly::monomial(3, Rational(2)) - Poly::monomial(1, Rational(2)));
}

TEST_CASE("strand-count mismatch rejected") {
  CHECK_THROWS_AS(named_elements(2).at("a") * named_elements(3).at("d"),
                  std::invalid_argument);
  CHECK_THROWS_AS(named_elements(4), std::invalid_argument);
}

TEST_CASE("expression parsing") {
  auto el = named_elements(3);
  BrElement dmh = el.at("d") - el.at("h");
  CHECK(br_parse("(d-h)^3", 3) == dmh.pow(3));
  CHECK(br_parse("u+ - u- + x+ - x-", 3) ==
        el.at("u+") - el.at("u-") + el.at("x+") - el.at("x-"));
  auto el2 = named_elements(2);
  CHECK(br_parse("a*b", 2) == el2.at("a"));
  CHECK(br_parse("a b", 2) == el2.at("a"));
  CHECK(br_parse("2a - a", 2) == el2.at("a"));
  CHECK(br_parse("c*a", 2) == el2.at("a") * Poly::c());
  CHECK(br_parse("(u+ + x+)(u- - x-)", 3) ==
        (el.at("u+") + el.at("x+")) * (el.at("u-") - el.at("x-")));
  CHECK_THROWS_AS(br_parse("q", 3), std::invalid_argument);
  CHECK_THROWS_AS(br_parse("(d-h", 3), std::invalid_argument);
  CHECK_THROWS_AS(br_parse("d +", 3), std::invalid_argument);
}

}  // TEST_SUITE
