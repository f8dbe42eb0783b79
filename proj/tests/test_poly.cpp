#include <random>

#include "doctest.h"
#include "vassiliev/poly.hpp"

using namespace vassiliev;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg = 6) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> cs(deg(rng) + 1);
  for (auto& c : cs) c = Rational(num(rng), den(rng));
  return Poly(cs);
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("basic arithmetic") {
  Poly c = Poly::c();
  Poly one{Rational(1)};
  CHECK((c * c - one) + one == c * c);
  CHECK((c - one) * (c + one) == c * c - one);
  CHECK(Poly::monomial(3) - Poly::monomial(3) == Poly{});
  CHECK(Poly{}.is_zero());
}

TEST_CASE("degree and ord") {
  CHECK(!Poly{}.degree().has_value());
  CHECK(!Poly{}.ord().has_value());
  Poly p = Poly::monomial(3, Rational(2)) - Poly::monomial(1, Rational(2));
  CHECK(p.degree() == 3);
  CHECK(p.ord() == 1);
}

TEST_CASE("evaluation") {
  Poly p = Poly::monomial(3, Rational(2)) - Poly::monomial(1, Rational(2));
  CHECK(p.eval(Rational(2)) == 12);
  CHECK(p.eval(Rational(0)) == p.coeff(0));
  // 2 c(c-1)(c-2) at -2
  Poly q = Poly::c() * (Poly::c() - Poly(Rational(1))) *
           (Poly::c() - Poly(Rational(2))) * Rational(2);
  CHECK(q.eval(Rational(-2)) == -48);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("c-tilde substitution round trip") {
  CHECK(Poly::c().in_ctilde() == Poly::c() + Poly(Rational(2)));
  CHECK(Poly(Rational(1)).in_ctilde() == Poly(Rational(1)));
  std::mt19937 rng(777);
  for (int i = 0; i < 50; ++i) {
    Poly p = random_poly(rng);
    CHECK(p.in_ctilde().from_ctilde() == p);
    CHECK(p.from_ctilde().in_ctilde() == p);
  }
}

TEST_CASE("exact division") {
  Poly c = Poly::c();
  Poly one{Rational(1)};
  CHECK((c * c * c - c).div_exact(c) == c * c - one);
  CHECK_THROWS_AS((c * c).div_exact(c - one), std::domain_error);
  CHECK_THROWS_AS(c.div_exact(Poly{}), std::domain_error);
  std::mt19937 rng(999);
  for (int i = 0; i < 50; ++i) {
    Poly p = random_poly(rng);
    Poly q = random_poly(rng);
    if (q.is_zero()) continue;
    CHECK((q * p).div_exact(q) == p);
  }
}

TEST_CASE("text format round trip") {
  Poly p = Poly::monomial(3, Rational(2)) - Poly::monomial(1, Rational(2));
  CHECK(p.str() == "2*c^3 - 2*c");
  CHECK(Poly::parse("2*c^3 - 2*c") == p);
  CHECK(Poly::parse("c^2 + 1") == Poly::c() * Poly::c() + Poly(Rational(1)));
  CHECK(Poly::parse("1/2*c") == Poly::monomial(1, Rational(1, 2)));
  CHECK(Poly::parse("-c + 3") == Poly(Rational(3)) - Poly::c());
  CHECK(Poly::parse("0") == Poly{});
  CHECK_THROWS_AS(Poly::parse("c^"), std::invalid_argument);
  CHECK_THROWS_AS(Poly::parse("2 +"), std::invalid_argument);
  std::mt19937 rng(31337);
  for (int i = 0; i < 50; ++i) {
    Poly p2 = random_poly(rng);
    CHECK(Poly::parse(p2.str()) == p2);
  }
}

}  // TEST_SUITE
