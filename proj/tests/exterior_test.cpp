#include <doctest.h>

#include <random>

#include "moduli/exterior.hpp"
#include "moduli/poincare.hpp"

using namespace moduli;

namespace {

ExteriorElement psi(long g, long i) { return ExteriorElement::psi(g, i); }

ExteriorElement psis(long g, std::vector<long> indices) {
  return ExteriorElement(g, subset_from_indices(indices));
}

}  // namespace

TEST_CASE("subsets") {
  CHECK(subset_indices(subset_from_indices({3, 1})) == std::vector<long>{1, 3});
  CHECK(subsets_of_size(4, 2).size() == 6);
  CHECK(subset_indices(subsets_of_size(4, 2).front()) == std::vector<long>{1, 2});
  CHECK(subset_indices(subsets_of_size(4, 2).back()) == std::vector<long>{3, 4});
  CHECK(subset_less(subset_from_indices({1, 4}), subset_from_indices({2, 3})));
  CHECK(subset_less(subset_from_indices({4}), subset_from_indices({1, 2})));
  CHECK(wedge_sign(subset_from_indices({2}), subset_from_indices({1})) == -1);
  CHECK(wedge_sign(subset_from_indices({1}), subset_from_indices({1})) == 0);
}

TEST_CASE("wedge product") {
  CHECK(wedge(psi(2, 1), psi(2, 2)) == psis(2, {1, 2}));
  CHECK(wedge(psi(2, 2), psi(2, 1)) == psis(2, {1, 2}) * Rational(-1));
  CHECK(wedge(psi(2, 3), psi(2, 3)).is_zero());
  CHECK(wedge(psis(2, {1, 2}), psis(2, {2, 4})).is_zero());
  CHECK(wedge(gamma_class(2), gamma_class(2)) == psis(2, {1, 2, 3, 4}) * Rational(-8));
  CHECK_THROWS_AS(wedge(psi(2, 1), psi(3, 1)), Error);
  CHECK_THROWS_AS(psi(2, 5), Error);
  CHECK_THROWS_AS(ExteriorElement(kMaxExteriorGenus + 1), Error);

  std::mt19937_64 rng(3);
  auto random_element = [&](long g) {
    ExteriorElement x(g);
    for (int t = 0; t < 3; ++t) x.add_term(static_cast<Subset>(rng() % (1u << (2 * g))), Rational(long(rng() % 5) - 2));
    return x;
  };
  for (int s = 0; s < 30; ++s) {
    const ExteriorElement x = random_element(3), y = random_element(3), z = random_element(3);
    CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
    CHECK(wedge(x, y + z) == wedge(x, y) + wedge(x, z));
  }
}

TEST_CASE("gamma") {
  CHECK(gamma_class(1) == psis(1, {1, 2}) * Rational(2));
  CHECK(gamma_class(2) == psis(2, {1, 3}) * Rational(2) + psis(2, {2, 4}) * Rational(2));
  CHECK(format_exterior(gamma_class(2)) == "2*p1p3 + 2*p2p4");
  CHECK(gamma_power(2, 3).is_zero());
  CHECK(gamma_power(2, 0) == ExteriorElement::one(2));
  // γ^g = g! 2^g (±) top class, never zero.
  for (long g = 1; g <= 5; ++g) CHECK_FALSE(gamma_power(g, g).is_zero());
}

TEST_CASE("text form") {
  CHECK(parse_exterior(2, "2*p1p3 + 2*p2p4") == gamma_class(2));
  CHECK(parse_exterior(2, "p3p1") == psis(2, {1, 3}) * Rational(-1));
  CHECK(parse_exterior(2, "1") == ExteriorElement::one(2));
  CHECK(parse_exterior(2, "0").is_zero());
  CHECK(parse_exterior(2, "-1/2*p1 + p2p3p4") == psi(2, 1) * Rational(-1, 2) + psis(2, {2, 3, 4}));
  CHECK(format_exterior(ExteriorElement::one(2)) == "1");
  CHECK_THROWS_AS(parse_exterior(2, "p5"), Error);
  CHECK_THROWS_AS(parse_exterior(2, "p1 +"), Error);
  CHECK(parse_exterior(2, "p1p1").is_zero());
  const ExteriorElement x = parse_exterior(3, "3/4*p1p5 - p2p3p6 + 2");
  CHECK(parse_exterior(3, format_exterior(x)) == x);
}

TEST_CASE("primitive bases") {
  CHECK(primitive_basis(2, 1)->vectors.size() == 4);
  CHECK(primitive_basis(2, 2)->vectors.size() == 5);
  REQUIRE(primitive_basis(2, 0)->vectors.size() == 1);
  CHECK(primitive_basis(2, 0)->vectors[0] == ExteriorElement::one(2));
  CHECK(primitive_dimension_formula(2, 2) == 5);
  CHECK(primitive_dimension_formula(3, 0) == 1);
  for (long g = 1; g <= 4; ++g)
    for (long k = 0; k <= g; ++k) {
      auto basis = primitive_basis(g, k);
      CHECK(Integer(static_cast<long>(basis->vectors.size())) == binomial(2 * g, k) - binomial(2 * g, k - 2));
      for (const auto& v : basis->vectors) {
        CHECK(v.degree() == k);
        CHECK(wedge(gamma_power(g, g - k + 1), v).is_zero());
      }
    }
  // Same object each time (cached).
  CHECK(primitive_basis(3, 2) == primitive_basis(3, 2));
}

TEST_CASE("dimension bookkeeping") {
  for (long g = 1; g <= 4; ++g)
    for (long k = 0; k <= 2 * g; ++k) CHECK(Integer(lefschetz_dimension_sum(g, k)) == binomial(2 * g, k));
}

TEST_CASE("Lefschetz decomposition") {
  SUBCASE("gamma itself") {
    const auto parts = lefschetz_decompose(gamma_class(2));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].m == 1);
    CHECK(parts[0].primitive == ExteriorElement::one(2));
  }
  SUBCASE("psi1 psi3") {
    const auto parts = lefschetz_decompose(psis(2, {1, 3}));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].m == 0);
    CHECK(parts[0].primitive == psis(2, {1, 3}) - gamma_class(2) * Rational(1, 4));
    CHECK(parts[1].m == 1);
    CHECK(parts[1].primitive == ExteriorElement::one(2) * Rational(1, 4));
  }
  SUBCASE("primitive input") {
    const ExteriorElement x = psis(2, {1, 2});
    const auto parts = lefschetz_decompose(x);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].m == 0);
    CHECK(parts[0].primitive == x);
  }
  SUBCASE("zero and mixed degrees") {
    CHECK(lefschetz_decompose(ExteriorElement(2)).empty());
    CHECK_THROWS_AS(lefschetz_decompose(psi(2, 1) + psis(2, {1, 2})), Error);
  }
  SUBCASE("reassembly") {
    std::mt19937_64 rng(17);
    for (long g = 1; g <= 4; ++g)
      for (int s = 0; s < 15; ++s) {
        const long k = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * g + 1));
        const auto subsets = subsets_of_size(2 * g, k);
        ExteriorElement x(g);
        for (int t = 0; t < 3; ++t) x.add_term(subsets[rng() % subsets.size()], Rational(long(rng() % 7) - 3));
        ExteriorElement back(g);
        for (const auto& part : lefschetz_decompose(x)) {
          const auto basis = primitive_basis(g, k - 2 * part.m);
          REQUIRE(part.coordinates.size() == basis->vectors.size());
          ExteriorElement combined(g);
          for (std::size_t i = 0; i < basis->vectors.size(); ++i)
            combined += basis->vectors[i] * part.coordinates[i];
          CHECK(combined == part.primitive);
          back += wedge(gamma_power(g, part.m), part.primitive);
        }
        CHECK(back == x);
      }
  }
}

TEST_CASE("coordinates round trip") {
  const ExteriorElement x = parse_exterior(2, "p1p2 - 3*p2p4");
  CHECK(ExteriorElement::from_coordinates(2, 2, x.coordinates(2)) == x);
  CHECK(x.coordinates(2).size() == 6);
}

TEST_CASE("monomial basis count") {
  const auto d3 = basis_37(2, 3);
  CHECK(d3.size() == 4);
  for (const auto& d : d3) {
    CHECK(d.i == 0);
    CHECK(d.j == 0);
  }
  const auto d6 = basis_37(2, 6);
  REQUIRE(d6.size() == 1);
  CHECK(d6[0].i == 1);
  CHECK(d6[0].j == 1);
  CHECK(d6[0].psi == 0);
  CHECK(basis_37(4, 0).size() == 1);
  for (long g = 2; g <= 6; ++g)
    for (long n = 0; n <= 6 * g - 6; ++n) CHECK(Integer(static_cast<long>(basis_37(g, n).size())) == betti(g, n));
}
