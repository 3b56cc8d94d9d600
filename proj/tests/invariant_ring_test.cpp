#include <doctest.h>

#include "moduli/invariant_ring.hpp"

using namespace moduli;

namespace {

const InvariantPolynomial a = InvariantPolynomial::alpha();
const InvariantPolynomial b = InvariantPolynomial::beta();
const InvariantPolynomial g = InvariantPolynomial::gamma();

}  // namespace

TEST_CASE("monomial order") {
  const Monomial alpha3{3, 0, 0}, ab{1, 1, 0}, gamma{0, 0, 1}, one{0, 0, 0}, alpha{1, 0, 0};
  CHECK(compare_monomials(alpha3, ab) > 0);
  CHECK(compare_monomials(alpha3, gamma) > 0);
  CHECK(compare_monomials(gamma, ab) > 0);
  CHECK(compare_monomials(alpha, one) > 0);
  CHECK(compare_monomials(gamma, gamma) == 0);
  // α^g beats everything else of degree 2g.
  for (std::uint32_t j = 0; 2 * j <= 6; ++j)
    for (std::uint32_t p = 0; 2 * j + 3 * p <= 6; ++p) {
      const Monomial m{6 - 2 * j - 3 * p, j, p};
      if (m == Monomial{6, 0, 0}) continue;
      CHECK(compare_monomials(Monomial{6, 0, 0}, m) > 0);
    }
}

TEST_CASE("monomial order is multiplicative") {
  for (std::uint32_t x = 0; x < 64; ++x)
    for (std::uint32_t y = 0; y < 64; ++y) {
      const Monomial m1{x % 4, (x / 4) % 4, x / 16}, m2{y % 4, (y / 4) % 4, y / 16};
      const Monomial shift{1, 2, 1};
      CHECK((compare_monomials(m1, m2) < 0) == (compare_monomials(m1 * shift, m2 * shift) < 0));
    }
}

TEST_CASE("polynomial arithmetic") {
  CHECK(a * b == InvariantPolynomial(Monomial{1, 1, 0}));
  CHECK((a * a + b) * Rational(1) == a * a + b);
  const InvariantPolynomial c = g * Rational(2) + a * b;
  CHECK(c * c == g * g * Rational(4) + a * b * g * Rational(4) + a * a * b * b);
  CHECK((a - a).is_zero());
  CHECK((a + b).size() == 2);
  CHECK((a * Rational(0)).is_zero());
  CHECK(pow(a + b, 0) == InvariantPolynomial(Rational(1)));
  CHECK(pow(a + b, 2) == a * a + a * b * Rational(2) + b * b);
}

TEST_CASE("leading term and degree") {
  const InvariantPolynomial z3 = pow(a, 3) + a * b * Rational(5) + g * Rational(4);
  CHECK(z3.is_homogeneous());
  CHECK(z3.degree() == 6);
  CHECK(z3.leading_term().first == Monomial{3, 0, 0});
  CHECK_FALSE((a + b).is_homogeneous());
  CHECK_THROWS_AS((a + b).degree(), Error);
  CHECK_THROWS_AS(InvariantPolynomial().leading_term(), Error);
  CHECK(InvariantPolynomial().is_homogeneous());
}

TEST_CASE("homogeneous components") {
  const auto parts = homogeneous_components(a + b);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 2);
  CHECK(parts[0].second == a);
  CHECK(parts[1].first == 4);
  CHECK(parts[1].second == b);
  CHECK(homogeneous_components(InvariantPolynomial()).empty());
  const auto single = homogeneous_components(pow(a, 3) + a * b * Rational(5) + g * Rational(4));
  REQUIRE(single.size() == 1);
  CHECK(single[0].first == 6);
}

TEST_CASE("mu coefficients") {
  const InvariantPolynomial z3 = pow(a, 3) + a * b * Rational(5) + g * Rational(4);
  const MuTable mu = to_mu_coefficients(z3);
  CHECK(mu == MuTable{{{0, 0}, 1}, {{1, 0}, 3}, {{0, 1}, 2}});
  CHECK(to_mu_coefficients(g * Rational(2) + a * b) == MuTable{{{0, 1}, 1}});
  CHECK(to_mu_coefficients(b * b) == MuTable{{{2, 0}, 1}});
  CHECK(from_mu_coefficients(mu, 3) == z3);
  CHECK(to_mu_coefficients(InvariantPolynomial()).empty());
  CHECK_THROWS_AS(to_mu_coefficients(a + b), Error);
}

TEST_CASE("text format") {
  const InvariantPolynomial z3 = parse_poly("a^3 + 5*a*b + 4*g");
  CHECK(z3 == pow(a, 3) + a * b * Rational(5) + g * Rational(4));
  // Descending monomial order puts γ ahead of αβ.
  CHECK(format_poly(z3) == "a^3 + 4*g + 5*a*b");
  CHECK(parse_poly("0").is_zero());
  CHECK(format_poly(InvariantPolynomial()) == "0");
  const InvariantPolynomial half = parse_poly("-1/2*a*b^2");
  CHECK(half.size() == 1);
  CHECK(half.coefficient(Monomial{1, 2, 0}) == Rational(-1, 2));
  CHECK(format_poly(half) == "-1/2*a*b^2");
  CHECK(parse_poly("  g  -  a*b ") == g - a * b);
  CHECK(parse_poly("2 * a^2 * g + 1") == a * a * g * Rational(2) + Rational(1));
  CHECK(parse_poly("a*a") == a * a);
  CHECK(format_poly(parse_poly("-1")) == "-1");
  CHECK(format_monomial(Monomial{0, 0, 0}) == "1");
  CHECK(format_monomial(Monomial{2, 0, 3}) == "a^2*g^3");
}

TEST_CASE("parse errors carry positions") {
  for (const char* bad : {"a^", "3*", "a + + b", "x", "a^b", "1/0*a", "(a)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_poly(bad), ParseError);
  }
  try {
    parse_poly("a + x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("parse inverts format") {
  const InvariantPolynomial samples[] = {
      pow(a - b * Rational(3, 7), 3) + g,
      g * g * Rational(-5, 2) + Rational(1, 3),
      a * b * g,
  };
  for (const auto& p : samples) CHECK(parse_poly(format_poly(p)) == p);
}
