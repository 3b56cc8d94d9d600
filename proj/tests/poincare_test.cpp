#include <doctest.h>

#include "moduli/poincare.hpp"

using namespace moduli;

namespace {

SeriesPolynomial from_list(std::initializer_list<std::pair<long, long>> terms) {
  SeriesPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("series arithmetic") {
  const SeriesPolynomial x = SeriesPolynomial::monomial(1);
  const SeriesPolynomial one(1);
  CHECK((x + one) * (x - one) == SeriesPolynomial::monomial(2) - one);
  CHECK(SeriesPolynomial::one_minus_t_pow(3) == SeriesPolynomial(1) - SeriesPolynomial::monomial(3));
  CHECK(divide_exact(SeriesPolynomial::one_minus_t_pow(8), SeriesPolynomial::one_minus_t_pow(2)) ==
        from_list({{0, 1}, {2, 1}, {4, 1}, {6, 1}}));
  CHECK_THROWS_AS(divide_exact(SeriesPolynomial::one_minus_t_pow(3), SeriesPolynomial::one_minus_t_pow(2)),
                  Error);
  CHECK((x - x).is_zero());
  CHECK(SeriesPolynomial().degree() == -1);
  CHECK(pow(x + one, 3) == from_list({{0, 1}, {1, 3}, {2, 3}, {3, 1}}));
  CHECK(format_series(from_list({{0, 1}, {2, 1}, {3, 4}})) == "1 + t^2 + 4*t^3");
  CHECK(format_series(from_list({{1, -2}, {5, 1}})) == "-2*t + t^5");
  CHECK(format_series(SeriesPolynomial()) == "0");
  CHECK(from_list({{0, 1}, {3, 2}}).evaluate(Rational(1, 2)) == Rational(5, 4));
  CHECK(from_list({{0, 1}, {2, 5}, {4, 1}}).is_palindromic());
  CHECK_FALSE(from_list({{0, 1}, {2, 5}}).is_palindromic());
}

// Reference polynomials expanded independently with sympy from the
// quotient (1+t^3)^{2g} - t^{2g}(1+t)^{2g} over (1-t^2)(1-t^4).
TEST_CASE("full Poincare polynomial") {
  const SeriesPolynomial p2 = from_list({{0, 1}, {2, 1}, {3, 4}, {4, 1}, {6, 1}});
  const SeriesPolynomial p3 = from_list({{0, 1}, {2, 1}, {3, 6}, {4, 2}, {5, 6}, {6, 16}, {7, 6},
                                         {8, 2}, {9, 6}, {10, 1}, {12, 1}});
  const SeriesPolynomial p5 =
      from_list({{0, 1},    {2, 1},    {3, 10},   {4, 2},    {5, 10},   {6, 47},  {7, 20},
                 {8, 48},   {9, 140},  {10, 92},  {11, 140}, {12, 258}, {13, 140}, {14, 92},
                 {15, 140}, {16, 48},  {17, 20},  {18, 47},  {19, 10},  {20, 2},  {21, 10},
                 {22, 1},   {24, 1}});
  for (FullForm form : {FullForm::Harder, FullForm::Monomial, FullForm::Binomial}) {
    CHECK(poincare_full(2, form) == p2);
    CHECK(poincare_full(3, form) == p3);
    CHECK(poincare_full(5, form) == p5);
  }
  CHECK(poincare_full(2).evaluate(1) == 8);
  CHECK_THROWS_AS(poincare_full(1), Error);
  for (long g = 2; g <= 16; ++g) {
    const SeriesPolynomial p = poincare_full(g);
    CHECK(p == poincare_full(g, FullForm::Monomial));
    CHECK(p == poincare_full(g, FullForm::Binomial));
    CHECK(p.is_palindromic());
    CHECK(p.degree() == 6 * g - 6);
    CHECK(p.coefficient(3) == 2 * g);
  }
}

TEST_CASE("betti numbers") {
  CHECK(betti(2, 0) == 1);
  CHECK(betti(2, 3) == 4);
  CHECK(betti(2, 7) == 0);
  for (long g = 2; g <= 8; ++g)
    for (long n = 0; n <= 6 * g - 6; ++n) CHECK(betti(g, n) == betti(g, 6 * g - 6 - n));
}

TEST_CASE("invariant Poincare polynomial") {
  CHECK(format_series(poincare_invariant(2)) == "1 + t^2 + t^4 + t^6");
  CHECK(poincare_invariant(1) == SeriesPolynomial(1));
  CHECK(poincare_invariant(0).is_zero());
  CHECK(poincare_invariant(3).evaluate(1) == 10);
  CHECK(poincare_invariant(4) == from_list({{0, 1}, {2, 1}, {4, 2}, {6, 3}, {8, 3}, {10, 3}, {12, 3},
                                            {14, 2}, {16, 1}, {18, 1}}));
  CHECK(poincare_invariant(5, InvariantForm::Sum) ==
        from_list({{0, 1}, {2, 1}, {4, 2}, {6, 3}, {8, 4}, {10, 4}, {12, 5}, {14, 4}, {16, 4}, {18, 3},
                   {20, 2}, {22, 1}, {24, 1}}));
  for (long g = 1; g <= 16; ++g) {
    const SeriesPolynomial p = poincare_invariant(g);
    CHECK(p == poincare_invariant(g, InvariantForm::Sum));
    CHECK(p.is_palindromic());
    CHECK(p.degree() == 6 * g - 6);
    CHECK(p.evaluate(1) == Rational(g * (g + 1) * (g + 2) / 6));
  }
}

TEST_CASE("invariant part sits inside the full ring") {
  for (long g = 2; g <= 12; ++g) {
    const SeriesPolynomial difference = poincare_full(g) - poincare_invariant(g);
    for (const auto& [e, c] : difference.coefficients()) {
      CAPTURE(g);
      CAPTURE(e);
      CHECK(c >= 0);
    }
  }
}

TEST_CASE("series identities") {
  // With the zero ring at g = 0 the recurrence holds already at g = 2; a
  // constant 1 there would leave 1 + t^2 + t^4 on the left.
  CHECK(truncated_free_series(2) == from_list({{0, 1}, {2, 1}, {4, 1}, {6, 1}}));
  CHECK(poincare_invariant(2) - SeriesPolynomial::monomial(6) * poincare_invariant(0) == truncated_free_series(2));
  CHECK(poincare_invariant(3) - SeriesPolynomial::monomial(6) * poincare_invariant(1) == truncated_free_series(3));
  const SeriesIdentityReport report = check_series_identities(12);
  CHECK(report.failures.empty());
  CHECK(report.instances_checked == 2 * 11);
}
