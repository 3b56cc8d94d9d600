#pragma once

// Integer polynomials in t and the closed forms of the Poincaré polynomials
// P(N_g; t) and P_I(N_g; t).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "moduli/exact_math.hpp"

namespace moduli {

class SeriesPolynomial {
 public:
  using CoefficientMap = std::map<long, Integer>;

  SeriesPolynomial() = default;
  SeriesPolynomial(const Integer& constant);  // NOLINT: implicit scalar
  static SeriesPolynomial monomial(long exponent, const Integer& coeff = 1);
  /// 1 - t^k
  static SeriesPolynomial one_minus_t_pow(long k);

  const CoefficientMap& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coefficient(long exponent) const;
  /// -1 for the zero polynomial.
  long degree() const;
  long low_degree() const;

  bool is_palindromic() const;
  Rational evaluate(const Rational& t) const;

  void add_term(long exponent, const Integer& coeff);

  SeriesPolynomial& operator+=(const SeriesPolynomial& other);
  SeriesPolynomial& operator-=(const SeriesPolynomial& other);
  SeriesPolynomial& operator*=(const SeriesPolynomial& other);

  friend SeriesPolynomial operator+(SeriesPolynomial x, const SeriesPolynomial& y) { return x += y; }
  friend SeriesPolynomial operator-(SeriesPolynomial x, const SeriesPolynomial& y) { return x -= y; }
  friend SeriesPolynomial operator*(const SeriesPolynomial& x, const SeriesPolynomial& y);
  friend bool operator==(const SeriesPolynomial& x, const SeriesPolynomial& y) {
    return x.coeffs_ == y.coeffs_;
  }

  /// Multiplies by t^k.
  SeriesPolynomial shifted(long k) const;

 private:
  CoefficientMap coeffs_;
};

SeriesPolynomial pow(const SeriesPolynomial& base, unsigned exponent);

/// Exact quotient; throws InexactDivision if the remainder is nonzero.
SeriesPolynomial divide_exact(const SeriesPolynomial& numerator,
                              const SeriesPolynomial& denominator);

/// "1 + t^2 + 4*t^3"
std::string format_series(const SeriesPolynomial& p);

enum class FullForm { Harder, Monomial, Binomial };
enum class InvariantForm { Product, Sum };

/// P(N_g; t), g >= 2, via one of three independent closed forms.
SeriesPolynomial poincare_full(long g, FullForm form = FullForm::Harder);

/// P_I(N_g; t). Defined for g >= 0; g = 0 is the zero ring and gives 0.
SeriesPolynomial poincare_invariant(long g, InvariantForm form = InvariantForm::Product);

/// Coefficient of t^n in P(N_g; t).
Integer betti(long g, long n);

/// (1 - t^{2m})(1 - t^{4m}) / ((1 - t^2)(1 - t^4))
SeriesPolynomial truncated_free_series(long m);

struct SeriesIdentityFailure {
  std::string identity;
  long g = 0;
};

struct SeriesIdentityReport {
  std::size_t instances_checked = 0;
  std::vector<SeriesIdentityFailure> failures;
};

/// For 2 <= g <= g_max: the P_I recurrence
///   P_I(g) - t^6 P_I(g-2) = (1-t^{2g})(1-t^{4g})/((1-t^2)(1-t^4))
/// and the convolution identity
///   Σ_{k<g} (C(2g,k) - C(2g,k-2)) t^{3k} P_I(g-k)
///     = Σ_{k<g} C(2g,k) t^{3k} (1-t^{2g-2k})(1-t^{4g-4k})/((1-t^2)(1-t^4)).
SeriesIdentityReport check_series_identities(long g_max);

}  // namespace moduli
