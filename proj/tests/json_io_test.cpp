#include <doctest.h>

#include "moduli/json_io.hpp"
#include "moduli/zeta_sequences.hpp"

using namespace moduli;

TEST_CASE("rationals are strings") {
  CHECK(rational_to_json(Rational(-1, 2)) == Json("-1/2"));
  CHECK(rational_to_json(Rational(3)) == Json("3"));
  CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
  CHECK_THROWS(rational_from_json(Json(3)));
}

TEST_CASE("polynomials") {
  const InvariantPolynomial z3 = zeta_recursive(3);
  const Json j = poly_to_json(z3);
  REQUIRE(j["terms"].size() == 3);
  CHECK(j["terms"][0]["a"] == 3);
  CHECK(j["terms"][0]["coeff"] == "1");
  CHECK(j["terms"][1]["g"] == 1);
  CHECK(j["terms"][1]["coeff"] == "4");
  CHECK(poly_from_json(j) == z3);
  CHECK(poly_from_json(Json::parse(j.dump())) == z3);
  const InvariantPolynomial z = zhat_relation(6, 1);
  CHECK(poly_from_json(Json::parse(poly_to_json(z).dump())) == z);
  CHECK(poly_from_json(poly_to_json(InvariantPolynomial())).is_zero());
  CHECK(monomial_from_json(monomial_to_json(Monomial{1, 2, 3})) == Monomial{1, 2, 3});
}

TEST_CASE("matrices") {
  const RationalMatrix m = relation_matrix(5);
  const Json j = matrix_to_json(m);
  CHECK(j.size() == 6);
  CHECK(j[0][0] == "1");
  CHECK(matrix_from_json(Json::parse(j.dump())) == m);
}

TEST_CASE("series") {
  const SeriesPolynomial p = poincare_full(3);
  const Json j = series_to_json(p);
  CHECK(j["coefficients"]["3"] == "6");
  CHECK(series_from_json(Json::parse(j.dump())) == p);
  CHECK(series_from_json(series_to_json(SeriesPolynomial())).is_zero());
}

TEST_CASE("exterior elements") {
  const ExteriorElement x = parse_exterior(3, "-1/2*p1p4 + 3*p2p3p6 + 1");
  const Json j = exterior_to_json(x);
  CHECK(j["genus"] == 3);
  CHECK(exterior_from_json(Json::parse(j.dump())) == x);
  CHECK(exterior_to_json(gamma_class(2))["terms"][0]["subset"] == Json::array({1, 3}));
}
