#include <random>

#include "doctest.h"
#include "vassiliev/matrix.hpp"

using namespace vassiliev;

TEST_SUITE("matrix") {

TEST_CASE("rank basics") {
  QMatrix m({{Rational(1), Rational(0)},
             {Rational(0), Rational(1)},
             {Rational(1), Rational(1)}});
  CHECK(m.rank() == 2);
  CHECK(QMatrix({{Rational(0), Rational(0)}}).rank() == 0);
}

TEST_CASE("rank of rows with distinct lowest-order terms") {
  // rows = coefficient vectors of c - c^3 and c^2(c+5)
  QMatrix m({{Rational(0), Rational(1), Rational(0), Rational(-1)},
             {Rational(0), Rational(0), Rational(5), Rational(1)}});
  CHECK(m.rank() == 2);
}

TEST_CASE("rank equals rank of transpose") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dim(1, 6), val(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    int r = dim(rng), c = dim(rng);
    QMatrix m;
    for (int i = 0; i < r; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < c; ++j) row.emplace_back(val(rng));
      m.add_row(std::move(row));
    }
    CHECK(m.rank() == m.transpose().rank());
  }
}

TEST_CASE("ragged row rejected") {
  QMatrix m({{Rational(1), Rational(2)}});
  CHECK_THROWS_AS(m.add_row({Rational(1)}), std::invalid_argument);
}

TEST_CASE("span_dim") {
  CHECK(span_dim({}, Projection::both) == 0);
  PairedPoly v{Poly::c(), Poly::monomial(2)};
  CHECK(span_dim({v, v, v}, Projection::both) == 1);
  PairedPoly w{Poly::monomial(2), Poly::c()};
  CHECK(span_dim({v, w}, Projection::both) == 2);
  // gl-projection cannot distinguish values differing only in so
  PairedPoly u{Poly::c(), Poly::monomial(3)};
  CHECK(span_dim({v, u}, Projection::gl) == 1);
  CHECK(span_dim({v, u}, Projection::so) == 2);
}

}  // TEST_SUITE
