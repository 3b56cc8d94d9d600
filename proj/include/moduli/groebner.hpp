#pragma once

// Division, Buchberger certification and standard monomials for the
// invariant relation ideals I_g = (ζ_g, ζ_{g+1}, ζ_{g+2}).

#include <cstddef>
#include <string>
#include <vector>

#include "moduli/invariant_ring.hpp"
#include "moduli/poincare.hpp"

namespace moduli {

struct GroebnerBasis {
  long genus = 0;
  /// Stored order matters: normal_form reduces by the first element whose
  /// leading monomial divides.
  std::vector<InvariantPolynomial> elements;
  /// Human-readable label per element, e.g. "zhat(4,2)".
  std::vector<std::string> labels;
};

std::pair<Monomial, Rational> leading_monomial(const InvariantPolynomial& p);

/// Remainder of p on division by basis; no remaining monomial is divisible by a
/// leading monomial of basis. Deterministic: the largest reducible monomial is
/// always reduced first, by the first dividing element.
InvariantPolynomial normal_form(const InvariantPolynomial& p,
                                const std::vector<InvariantPolynomial>& basis);
InvariantPolynomial normal_form(const InvariantPolynomial& p, const GroebnerBasis& basis);

InvariantPolynomial s_polynomial(const InvariantPolynomial& f, const InvariantPolynomial& g);

struct SPairCertificate {
  std::size_t first = 0;
  std::size_t second = 0;
  Monomial lcm;
  InvariantPolynomial remainder;
};

struct GroebnerCertificate {
  bool is_groebner = true;
  std::vector<SPairCertificate> pairs;

  std::size_t failures() const;
};

GroebnerCertificate is_groebner(const std::vector<InvariantPolynomial>& basis);
GroebnerCertificate is_groebner(const GroebnerBasis& basis);

/// Leading monomial of ζ̂_{g,n}: α^{g-2n}γ^n for n <= g/2, γ^{g-n}β^{2n-g} otherwise.
Monomial expected_zhat_leading_monomial(long g, long n);

/// ζ̂_{g,0..g} plus the odd-genus extra element, with leading monomials
/// checked against expected_zhat_leading_monomial. g = 0 gives {1}; g = 1
/// gives the reduced basis {α, β, γ} of I_1.
GroebnerBasis invariant_groebner_basis(long g);

/// Monomials outside the leading-term ideal of invariant_groebner_basis(g),
/// ascending in the monomial order. Requires g >= 1.
std::vector<Monomial> standard_monomials(long g);

/// Σ t^{deg m} over standard_monomials(g).
SeriesPolynomial quotient_hilbert_series(long g);

bool ideal_contains(long g, const InvariantPolynomial& p);

/// Checks Σ cofactors[i] * generators[i] == target.
bool is_combination(const InvariantPolynomial& target,
                    const std::vector<InvariantPolynomial>& generators,
                    const std::vector<InvariantPolynomial>& cofactors);

}  // namespace moduli
