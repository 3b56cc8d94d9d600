#pragma once

#include <compare>
#include <cstdint>

namespace moduli {

/// α^a β^b γ^c with the weighted grading deg α = 2, deg β = 4, deg γ = 6.
struct Monomial {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;

  constexpr std::uint32_t degree() const { return 2 * a + 4 * b + 6 * c; }

  constexpr bool divides(const Monomial& m) const {
    return a <= m.a && b <= m.b && c <= m.c;
  }

  friend constexpr Monomial operator*(const Monomial& x, const Monomial& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c};
  }
  /// Caller guarantees y divides x.
  friend constexpr Monomial operator/(const Monomial& x, const Monomial& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c};
  }
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

constexpr Monomial lcm(const Monomial& x, const Monomial& y) {
  return {x.a > y.a ? x.a : y.a, x.b > y.b ? x.b : y.b, x.c > y.c ? x.c : y.c};
}

/// Weighted-degree graded reverse lexicographic order with α > γ > β:
/// higher weighted degree wins; on a tie the smaller β exponent wins, then the
/// smaller γ exponent. Within one degree this is revlex on (α, γ, β), and the
/// grading makes it a well-order compatible with multiplication.
constexpr std::strong_ordering compare_monomials(const Monomial& x,
                                                 const Monomial& y) {
  if (auto d = x.degree() <=> y.degree(); d != 0) return d;
  if (x.b != y.b) return y.b <=> x.b;
  if (x.c != y.c) return y.c <=> x.c;
  return std::strong_ordering::equal;
}

/// Strict weak ordering placing larger monomials first.
struct DescendingMonomialOrder {
  constexpr bool operator()(const Monomial& x, const Monomial& y) const {
    return compare_monomials(x, y) > 0;
  }
};

}  // namespace moduli
