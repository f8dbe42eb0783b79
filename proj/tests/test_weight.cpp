#include <algorithm>

#include "doctest.h"
#include "vassiliev/families.hpp"
#include "vassiliev/weight.hpp"

using namespace vassiliev;

namespace {

Diagram two_circles_one_chord() {
  return Diagram({{1}, {2}}, {}, {{1, 2}});
}

}  // namespace

TEST_SUITE("weight") {

TEST_CASE("chord-level gl") {
  Diagram bare;
  bare.circles.push_back({});
  CHECK(wgl_chord(bare) == Poly::c());
  CHECK(wgl_chord(theta()) == Poly::monomial(2));
  CHECK(wgl_chord(two_circles_one_chord()) == Poly::c());
}

TEST_CASE("chord-level so") {
  Diagram bare;
  bare.circles.push_back({});
  CHECK(wso_chord(bare) == Poly::c());
  CHECK(wso_chord(theta()) == Poly::monomial(2) - Poly::c());
  CHECK(wso_chord(two_circles_one_chord()).is_zero());
}

TEST_CASE("deframed pipeline on the printed values") {
  Poly c = Poly::c();
  Poly one{Rational(1)};
  CHECK(evaluate(omega(2), WeightFlavor::gl) ==
        Poly::monomial(3, Rational(2)) - Poly::monomial(1, Rational(2)));
  CHECK(evaluate(omega(2), WeightFlavor::so) ==
        c * (c - one) * (c - Poly(Rational(2))) * Rational(2));
  CHECK(evaluate(theta(), WeightFlavor::gl).is_zero());
  CHECK(evaluate(omega3_link(), WeightFlavor::so) ==
        c * (c - one) * (Poly(Rational(2)) - c) * Rational(2));
}

TEST_CASE("framed vs deframed") {
  CHECK(evaluate(theta(), WeightFlavor::gl, {.deframed = false}) ==
        Poly::monomial(2));
  CHECK(evaluate(theta(), WeightFlavor::gl).is_zero());
}

TEST_CASE("wso_tilde") {
  Poly c = Poly::c();
  CHECK(wso_tilde(omega(2)) == (c - Poly(Rational(2))) * Rational(2));
  CHECK(wso_tilde(t_power(omega(2), 1)) ==
        (c - Poly(Rational(2))) * wso_tilde(omega(2)));
}

TEST_CASE("functionals") {
  CHECK(functional(omega(2), Functional::r, 2, 1) == -12);
  CHECK(functional(omega(2), Functional::y, 2, 1) == 2);
  CHECK_THROWS_AS(functional(omega(2), Functional::r, 3, 1),
                  std::invalid_argument);
}

TEST_CASE("state-sum guard") {
  EvalOptions tight;
  tight.max_vertices = 1;
  CHECK_THROWS_AS(evaluate(omega(2), WeightFlavor::gl, tight),
                  std::runtime_error);
}

TEST_CASE("invalid diagram rejected") {
  Diagram d;
  d.circles.push_back({1});
  CHECK_THROWS_AS(evaluate(d, WeightFlavor::gl), std::invalid_argument);
}

TEST_CASE("combo evaluation is linear") {
  DiagramCombo c;
  c.add(Rational(3), omega(2));
  c.add(Rational(-1), theta());
  CHECK(evaluate(c, WeightFlavor::gl) ==
        evaluate(omega(2), WeightFlavor::gl) * Rational(3));
}

TEST_CASE("AS antisymmetry") {
  Poly gl = evaluate(omega(3), WeightFlavor::gl);
  CHECK(evaluate(flip_vertex(omega(3), 0), WeightFlavor::gl) == -gl);
  Poly so = evaluate(omega(3), WeightFlavor::so);
  CHECK(evaluate(flip_vertex(omega(3), 2), WeightFlavor::so) == -so);
}

TEST_CASE("STU resolution order does not change values") {
  for (int k : {3, 4}) {
    Diagram w = omega(k);
    Diagram rev = w;
    std::reverse(rev.vertices.begin(), rev.vertices.end());
    CHECK(evaluate(rev, WeightFlavor::gl) == evaluate(w, WeightFlavor::gl));
    CHECK(evaluate(rev, WeightFlavor::so) == evaluate(w, WeightFlavor::so));
  }
}

}  // TEST_SUITE
