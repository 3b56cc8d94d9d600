#include <doctest.h>

#include "moduli/groebner.hpp"
#include "moduli/zeta_sequences.hpp"

using namespace moduli;

// Expected polynomials below were produced independently with sympy
// (tests/oracles/generate.py) and frozen here.

TEST_CASE("zeta by recursion") {
  CHECK(zeta_recursive(0) == parse_poly("1"));
  CHECK(zeta_recursive(1) == parse_poly("a"));
  CHECK(zeta_recursive(2) == parse_poly("a^2 + b"));
  CHECK(zeta_recursive(3) == parse_poly("a^3 + 5*a*b + 4*g"));
  CHECK(zeta_recursive(4) == parse_poly("a^4 + 14*a^2*b + 9*b^2 + 16*a*g"));
  CHECK(zeta_recursive(5) == parse_poly("a^5 + 40*a^2*g + 30*a^3*b + 88*b*g + 89*a*b^2"));
  CHECK(zeta_recursive(6) ==
        parse_poly("a^6 + 80*a^3*g + 160*g^2 + 55*a^4*b + 688*a*b*g + 439*a^2*b^2 + 225*b^3"));
  CHECK(zeta_recursive(7) == parse_poly("a^7 + 140*a^4*g + 1120*a*g^2 + 91*a^5*b + 2968*a^2*b*g + "
                                        "1519*a^3*b^2 + 3708*b^2*g + 3429*a*b^3"));
  for (long n = 0; n <= 25; ++n) {
    const InvariantPolynomial z = zeta_recursive(n);
    CHECK(z.has_integer_coefficients());
    CHECK(z.is_homogeneous());
    CHECK(z.degree() == 2 * n);
  }
}

TEST_CASE("lambda table") {
  LambdaTable table;
  CHECK(lambda_coefficient(0, 0, table) == 1);
  CHECK(lambda_coefficient(1, 0, table) == 1);
  CHECK(lambda_coefficient(0, 1, table) == 2);
  CHECK(lambda_coefficient(2, 0, table) == 9);
  CHECK(lambda_coefficient(1, 1, table) == 44);
  CHECK(lambda_coefficient(0, 2, table) == 40);
  CHECK(lambda_coefficient(3, 0, table) == 225);
  CHECK(lambda_coefficient(-1, 2, table) == 0);
  CHECK(lambda_coefficient(2, -1, table) == 0);
  // A fresh table filled in a different order agrees.
  LambdaTable other;
  CHECK(other(3, 2) == table(3, 2));
  CHECK(other(1, 1) == 44);
}

TEST_CASE("closed form") {
  CHECK(zeta_closed(0) == parse_poly("1"));
  CHECK(zeta_closed(2) == parse_poly("a^2 + b"));
  CHECK(zeta_closed(3) == parse_poly("a^3 + 5*a*b + 4*g"));
  for (long n = 0; n <= 20; ++n) CHECK(zeta_closed(n) == zeta_recursive(n));
}

TEST_CASE("normalized zeta") {
  CHECK(zeta_normalized(-1).is_zero());
  CHECK(zeta_normalized(3) == parse_poly("1/6*a^3 + 5/6*a*b + 2/3*g"));
}

TEST_CASE("zhat by the sum formula") {
  CHECK(zhat_relation(2, 1) == parse_poly("2*a*b + 2*g"));
  CHECK(zhat_relation(3, 3) == parse_poly("b^3"));
  CHECK(zhat_relation(2, 5).is_zero());
  CHECK(zhat_relation(2, -1).is_zero());
  CHECK(zhat_relation(3, 1) == parse_poly("2*a*g + 3/2*a^2*b + 3/2*b^2"));
  CHECK(zhat_relation(4, 2) == parse_poly("2*g^2 + 6*a*b*g + 3*a^2*b^2 + 3*b^3"));
  CHECK(zhat_relation(5, 3) == parse_poly("6*b*g^2 + 12*a*b^2*g + 5*a^2*b^3 + 5*b^4"));
  CHECK(zhat_relation(6, 1) == parse_poly("1/12*a^4*g + 4/3*a*g^2 + 1/20*a^5*b + 19/6*a^2*b*g + "
                                          "3/2*a^3*b^2 + 103/20*b^2*g + 89/20*a*b^3"));
  for (long g = 0; g <= 10; ++g) {
    CHECK(zhat_relation(g, 0) == zeta_normalized(g));
    CHECK(zhat_relation(g, g) == pow(InvariantPolynomial::beta(), static_cast<unsigned>(g)));
  }
}

TEST_CASE("zhat by the alternating sum") {
  CHECK(zhat_relation_alt(2, 1) == parse_poly("2*a*b + 2*g"));
  CHECK(zhat_relation_alt(4, 0) == zeta_normalized(4));
  CHECK(zhat_relation_alt(3, 3) == parse_poly("b^3"));
  for (long g = 0; g <= 14; ++g) {
    for (long n = 0; n <= g; ++n) CHECK(zhat_relation_alt(g, n) == zhat_relation(g, n));
    for (long n = g + 1; n <= g + 3; ++n) CHECK(zhat_relation_alt(g, n).is_zero());
  }
}

TEST_CASE("odd-genus extra element") {
  CHECK(zhat_extra(3) == parse_poly("4*g^2 + 5*a*b*g - 3/4*a^4*b - 3/4*a^2*b^2"));
  CHECK(zhat_extra(5) == parse_poly("8*g^3 - 11/4*a^4*b*g + 30*a*b*g^2 - 5/3*a^5*b^2 + "
                                    "41/6*a^2*b^2*g - 25/3*a^3*b^3 + 45/4*b^3*g"));
  CHECK(zhat_extra(3).leading_term() == std::pair<Monomial, Rational>{Monomial{0, 0, 2}, 4});
  CHECK(zhat_extra(1).is_zero());
  for (long g = 3; g <= 15; g += 2) {
    CHECK(zhat_extra(g).leading_term().first == Monomial{0, 0, static_cast<std::uint32_t>((g + 1) / 2)});
    CHECK(zhat_extra(g).degree() == 3 * (g + 1));
  }
  try {
    zhat_extra(4);
    FAIL("expected EvenGenus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvenGenus);
  }
}

TEST_CASE("recurrence between zhat relations") {
  CHECK(zhat_relation(2, 1) ==
        InvariantPolynomial::beta() * zhat_relation(1, 0) * Rational(2) +
            InvariantPolynomial::gamma() * zhat_relation(0, 0) * Rational(2));
  CHECK(zhat_relation(3, 3) * Rational(3) ==
        InvariantPolynomial::beta() * zhat_relation(2, 2) * Rational(3) +
            InvariantPolynomial::gamma() * zhat_relation(1, 2) * Rational(2));
  const RecurrenceReport report = check_zhat_recurrence(14);
  CHECK(report.failures.empty());
  CHECK(report.instances_checked > 0);
}

TEST_CASE("coefficient sums") {
  const CoefficientSum s52 = prop41_coefficient_sum(5, 2);
  CHECK(s52.lhs == 10);
  CHECK(s52.rhs == 10);
  const CoefficientSum s73 = prop41_coefficient_sum(7, 3);
  CHECK(s73.lhs == 70);
  CHECK(s73.rhs == 70);
  const CoefficientSum s66 = prop41_coefficient_sum(6, 6);
  CHECK(s66.lhs == 265);
  CHECK(s66.rhs == 265);
  for (long d = 0; d <= 12; ++d) {
    // Independent of g once C(g,d) is divided out.
    const CoefficientSum x = prop41_coefficient_sum(d, d), y = prop41_coefficient_sum(d + 3, d);
    CHECK(x.lhs == x.rhs);
    CHECK(y.lhs == y.rhs);
    CHECK(y.lhs / Rational(binomial(d + 3, d)) == x.lhs);
  }
}

TEST_CASE("relation matrix") {
  const RationalMatrix m = relation_matrix(6);
  for (std::size_t c = 0; c < 6; ++c) CHECK(m(0, c) == (c < 3 ? 1 : 0));
  CHECK(m(1, 3) == 1);
  CHECK(determinant(m) == 69120);
  CHECK(determinant(relation_matrix(5)) == 5184);
  CHECK(relation_matrix_determinant_formula(6) == 69120);
  CHECK_THROWS_AS(relation_matrix(4), Error);
  const auto relations = degree_2g_plus_2_relations(7);
  REQUIRE(relations.size() == 6);
  for (const auto& r : relations) {
    CHECK(r.degree() == 16);
    CHECK(ideal_contains(5, r));
  }
}
