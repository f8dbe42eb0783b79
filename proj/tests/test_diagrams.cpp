#include "doctest.h"
#include "vassiliev/families.hpp"
#include "vassiliev/ops.hpp"
#include "vassiliev/weight.hpp"

using namespace vassiliev;

TEST_SUITE("diagrams") {

TEST_CASE("validate accepts well-formed diagrams") {
  Diagram bare;
  bare.circles.push_back({});
  CHECK(validate(bare).empty());
  CHECK(validate(theta()).empty());
  CHECK(validate(omega(2)).empty());
  CHECK(validate(psi()).empty());
  CHECK(validate(omega3_link()).empty());
}

TEST_CASE("validate reports violations") {
  Diagram d;
  d.circles.push_back({1});
  auto bad = validate(d);
  REQUIRE(!bad.empty());
  CHECK(bad.front().find("unmatched") != std::string::npos);

  Diagram dup;
  dup.circles.push_back({1, 1});
  CHECK(!validate(dup).empty());
}

TEST_CASE("degree arithmetic") {
  CHECK(omega(2).degree() == 2);
  CHECK(omega(5).degree() == 5);
  CHECK(theta().degree() == 1);
  CHECK(psi().degree() == 6);
  CHECK(insert_template(omega(2), 0, Template::t).degree() == 3);
  CHECK(insert_template(omega(4), 0, Template::x3).degree() == 7);
}

TEST_CASE("disjoint union") {
  Diagram d = disjoint_union(theta(), 1);
  CHECK(d.circle_count() == 2);
  CHECK(d.degree() == 1);
  CHECK(disjoint_union(theta(), 0) == theta());
  // each bare circle multiplies the gl value by c
  Poly base = evaluate(family_L(3), WeightFlavor::gl);
  CHECK(evaluate(disjoint_union(family_L(3), 1), WeightFlavor::gl) ==
        Poly::c() * base);
}

TEST_CASE("connected sum") {
  Diagram bare;
  bare.circles.push_back({});
  CHECK(connected_sum(theta(), 0, bare, 0) == theta());
  CHECK_THROWS_AS(connected_sum(theta(), 3, bare, 0), std::out_of_range);
  // product rule: c * W(D # D') = W(D) W(D')
  Poly w2gl = evaluate(omega(2), WeightFlavor::gl);
  Poly w2so = evaluate(omega(2), WeightFlavor::so);
  Diagram s = connected_sum(omega(2), 0, omega(2), 0);
  CHECK(Poly::c() * evaluate(s, WeightFlavor::gl) == w2gl * w2gl);
  CHECK(Poly::c() * evaluate(s, WeightFlavor::so) == w2so * w2so);
}

TEST_CASE("connected sum value is independent of the cut point") {
  // rotating a circle moves the canonical cut point
  Poly expect = evaluate(connected_sum(omega(2), 0, omega(2), 0), WeightFlavor::gl);
  Diagram rot = omega(2);
  std::rotate(rot.circles[0].begin(), rot.circles[0].begin() + 1,
              rot.circles[0].end());
  CHECK(evaluate(connected_sum(rot, 0, omega(2), 0), WeightFlavor::gl) == expect);
  CHECK(evaluate(connected_sum(omega(2), 0, rot, 0), WeightFlavor::gl) == expect);
}

TEST_CASE("deframe") {
  // wheels have no chords
  DiagramCombo w = deframe(omega(3));
  CHECK(w.terms.size() == 1);
  // theta: both replacement terms are again theta, so everything cancels
  DiagramCombo t = deframe(theta());
  t.normalize();
  CHECK(t.terms.empty());
  // L_1 expands into 3 terms
  DiagramCombo l = deframe(family_L(1));
  CHECK(l.terms.size() == 3);
}

TEST_CASE("stu reduction") {
  DiagramCombo chord = stu_reduce(theta());
  REQUIRE(chord.terms.size() == 1);
  CHECK(chord.terms[0].first == 1);
  CHECK(chord.terms[0].second == theta());
  DiagramCombo w2 = stu_reduce(omega(2));
  CHECK(w2.terms.size() == 4);  // 2^2 raw terms
  for (const auto& [c, d] : w2.terms) CHECK(d.is_chord_diagram());
}

TEST_CASE("flip_vertex is an involution") {
  Diagram d = omega(3);
  CHECK(flip_vertex(flip_vertex(d, 1), 1) == d);
  CHECK_THROWS_AS(flip_vertex(theta(), 0), std::out_of_range);
}

TEST_CASE("every operation output validates") {
  for (const Diagram& d :
       {omega(4), family_L(2), family_T(3), family_C(3),
        connected_sum(omega(2), 0, family_T(2), 1),
        insert_template(omega(3), 1, Template::t),
        insert_template(omega(4), 2, Template::x3), flip_vertex(omega(3), 0)})
    CHECK(validate(d).empty());
  for (const auto& [c, dd] : deframe(family_L(2)).terms)
    CHECK(validate(dd).empty());
  for (const auto& [c, dd] : stu_reduce(omega(3)).terms)
    CHECK(validate(dd).empty());
}

TEST_CASE("combo normalization merges and cancels") {
  DiagramCombo c;
  c.add(Rational(1), theta());
  c.add(Rational(2), theta());
  c.add(Rational(-3), theta());
  c.normalize();
  CHECK(c.terms.empty());
  c.add(Rational(1, 2), theta());
  c.add(Rational(1), omega(2));
  c.add(Rational(1, 2), theta());
  c.normalize();
  CHECK(c.terms.size() == 2);
}

}  // TEST_SUITE
