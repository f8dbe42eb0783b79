#include "doctest.h"
#include "vassiliev/families.hpp"

using namespace vassiliev;

TEST_SUITE("families") {

TEST_CASE("wheel structure") {
  Diagram w = omega(2);
  CHECK(w.circle_count() == 1);
  CHECK(w.leg_count() == 2);
  CHECK(w.vertex_count() == 2);
  CHECK(w.degree() == 2);
}

TEST_CASE("chain, ring, tube structure") {
  CHECK(family_L(0).circle_count() == 1);
  CHECK(family_L(3).circle_count() == 4);
  CHECK(family_L(3).degree() == 3);
  CHECK(family_C(0).circle_count() == 1);
  CHECK(family_C(1) == family_L(1));
  CHECK(family_C(4).circle_count() == 4);
  CHECK(family_T(0).circle_count() == 1);
  CHECK(family_T(3).circle_count() == 2);
  CHECK(family_T(3).degree() == 3);
}

TEST_CASE("closed forms at small k") {
  Poly c = Poly::c();
  Poly one{Rational(1)};
  CHECK(closed_form(Family::omega, WeightFlavor::so, 2) ==
        c * (c - one) * (c - Poly(Rational(2))) * Rational(2));
  CHECK(closed_form(Family::L, WeightFlavor::gl, 2) ==
        c * (one - c * c) * (one - c * c));
  CHECK(closed_form(Family::C, WeightFlavor::so, 3) ==
        c * (c - one) *
            (Poly(Rational(4)) - c * c * (one - c) * (one - c)));
  CHECK_THROWS_AS(closed_form(Family::C, WeightFlavor::gl, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(closed_form(Family::omega, WeightFlavor::gl, 1),
                  std::invalid_argument);
}

TEST_CASE("sequences") {
  CHECK(seq_a(2) == 2);
  CHECK(seq_a(3) == 0);
  CHECK(seq_a(4) == 4);
  CHECK(seq_a(5) == 4);
  CHECK(seq_a(6) == 12);
  CHECK(seq_R(3).eval(Rational(2)) == 0);
  for (int k = 2; k <= 6; ++k) {
    CHECK(seq_Q(k).eval(Rational(0)) == Rational(1 << (k - 1)));
    CHECK(seq_Q(k).eval(Rational(2)) ==
          (k % 2 ? Rational(-(1 << k)) : Rational(1 << k)));
  }
  for (int k = 1; k <= 10; ++k) {
    auto [d, e] = seq_de(k);
    CHECK(d - e == (k % 2 ? Rational(-1) : Rational(1)));
  }
  for (int k = 2; k <= 8; ++k) {
    Rational r0 = seq_R(k).eval(Rational(0));
    Integer num = numerator(r0);
    CHECK(denominator(r0) == 1);
    CHECK((num % 4 + 4) % 4 == 2);
  }
  for (int k = 2; k <= 6; ++k) CHECK(seq_P(k).eval(Rational(0)) != 0);
}

TEST_CASE("D and E constructions") {
  // conventions: D_{0,0,0} collapses to a single circle
  CHECK(D_ijk(0, 0, 0).circle_count() == 1);
  CHECK(D_ijk(2, 0, 0).circle_count() == 3);
  CHECK(D_ijk(0, 0, 3).circle_count() == 2);
  CHECK_THROWS_AS(D_ijk_l(2, 0, 0, 1), std::invalid_argument);
  DiagramCombo e = E_nl(4, 2);
  CHECK(e.terms.size() == 2);
  for (const auto& [c, d] : e.terms) CHECK(d.circle_count() == 2);
}

TEST_CASE("Sigma lists") {
  CHECK(Sigma(4).size() == 2);
  CHECK(Sigma(5).size() == 3);
  CHECK(Sigma(6).size() == 5);
  CHECK(Sigma(7).size() == 6);
  CHECK(Sigma(8).size() == 8);
  for (const Diagram& d : Sigma(6)) {
    CHECK(d.degree() == 6);
    CHECK(d.circle_count() == 1);
  }
}

TEST_CASE("M list cardinality") {
  CHECK(M_card(4, 2) == 5);
  CHECK(static_cast<int>(M_list(4, 2).size()) == 5);
  CHECK(static_cast<int>(M_list(4, 3).size()) == M_card(4, 3));
  CHECK(static_cast<int>(M_list(5, 2).size()) == M_card(5, 2));
  CHECK_THROWS_AS(M_list(3, 2), std::invalid_argument);
}

TEST_CASE("spec strings") {
  CHECK(build_diagram_spec("omega:4") == omega(4));
  CHECK(build_diagram_spec("psi") == psi());
  CHECK(build_diagram_spec("t^2:omega:2") == t_power(omega(2), 2));
  CHECK(build_diagram_spec("x3:omega:4") ==
        insert_template(omega(4), 0, Template::x3));
  CHECK(build_diagram_spec("D:1,0,2@3").circle_count() == 3);
  CHECK(build_combo_spec("E:4,2").terms.size() == 2);
  CHECK(build_list_spec("Sigma:5").size() == 3);
  CHECK(build_list_spec("M:4,2").size() == 5);
  CHECK_THROWS_AS(build_diagram_spec("omega:x"), std::invalid_argument);
  CHECK_THROWS_AS(build_diagram_spec("nope:1"), std::invalid_argument);
}

}  // TEST_SUITE
