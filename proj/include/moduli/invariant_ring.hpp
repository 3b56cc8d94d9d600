#pragma once

// The weighted polynomial ring Q[α, β, γ] (degrees 2, 4, 6).

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moduli/exact_math.hpp"
#include "moduli/monomial_order.hpp"

namespace moduli {

class InvariantPolynomial {
 public:
  /// Terms iterate from the largest monomial down.
  using TermMap = std::map<Monomial, Rational, DescendingMonomialOrder>;

  InvariantPolynomial() = default;
  InvariantPolynomial(const Rational& constant);  // NOLINT: implicit scalar
  InvariantPolynomial(const Monomial& m, const Rational& coeff = 1);

  static InvariantPolynomial alpha() { return {Monomial{1, 0, 0}}; }
  static InvariantPolynomial beta() { return {Monomial{0, 1, 0}}; }
  static InvariantPolynomial gamma() { return {Monomial{0, 0, 1}}; }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of m (zero when absent).
  Rational coefficient(const Monomial& m) const;

  /// Largest term; throws ZeroPolynomial on zero.
  std::pair<Monomial, Rational> leading_term() const;

  bool is_homogeneous() const;
  /// Weighted degree of a nonzero homogeneous polynomial (NotHomogeneous otherwise).
  std::uint32_t degree() const;
  bool has_integer_coefficients() const;

  void add_term(const Monomial& m, const Rational& coeff);

  InvariantPolynomial& operator+=(const InvariantPolynomial& other);
  InvariantPolynomial& operator-=(const InvariantPolynomial& other);
  InvariantPolynomial& operator*=(const Rational& scalar);
  InvariantPolynomial& operator*=(const InvariantPolynomial& other);

  friend InvariantPolynomial operator+(InvariantPolynomial x, const InvariantPolynomial& y) {
    return x += y;
  }
  friend InvariantPolynomial operator-(InvariantPolynomial x, const InvariantPolynomial& y) {
    return x -= y;
  }
  friend InvariantPolynomial operator-(InvariantPolynomial x) { return x *= Rational(-1); }
  friend InvariantPolynomial operator*(const InvariantPolynomial& x,
                                       const InvariantPolynomial& y);
  friend InvariantPolynomial operator*(InvariantPolynomial x, const Rational& s) {
    return x *= s;
  }
  friend InvariantPolynomial operator*(const Rational& s, InvariantPolynomial x) {
    return x *= s;
  }
  friend bool operator==(const InvariantPolynomial& x, const InvariantPolynomial& y) {
    return x.terms_ == y.terms_;
  }

  /// Multiplies by a single term.
  InvariantPolynomial shifted(const Monomial& m, const Rational& coeff) const;

 private:
  TermMap terms_;
};

InvariantPolynomial pow(const InvariantPolynomial& base, unsigned exponent);

/// Splits p by weighted degree; degrees strictly increasing. Zero gives [].
std::vector<std::pair<std::uint32_t, InvariantPolynomial>> homogeneous_components(
    const InvariantPolynomial& p);

// ---------------------------------------------------------------------------
// (t, u) coordinates: p = Σ μ_{t,u} α^s β^t (2γ+αβ)^u with s = g - 2t - 3u.

struct MuKey {
  std::uint32_t t = 0;
  std::uint32_t u = 0;
  friend auto operator<=>(const MuKey&, const MuKey&) = default;
};

using MuTable = std::map<MuKey, Rational>;

/// p must be homogeneous (of weighted degree 2g); zero yields an empty table.
MuTable to_mu_coefficients(const InvariantPolynomial& p);

/// Inverse of to_mu_coefficients for the half-degree g.
InvariantPolynomial from_mu_coefficients(const MuTable& table, std::uint32_t g);

// ---------------------------------------------------------------------------
// Text form: "a^3 + 5*a*b + 4*g" with a = α, b = β, g = γ.

std::string format_poly(const InvariantPolynomial& p);
InvariantPolynomial parse_poly(std::string_view text);
std::string format_monomial(const Monomial& m);

}  // namespace moduli
