#pragma once

// Canonical forms in H*(N_g) through the decomposition
//   H*(N_g) ≅ ⊕_k Λ₀^k ⊗ Q[α,β,γ]/I_{g-k}.
// A class is stored as primitive-basis coordinates, each paired with a
// polynomial in normal form modulo I_{g-k}.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "moduli/exterior.hpp"
#include "moduli/invariant_ring.hpp"

namespace moduli {

struct ComponentKey {
  long k = 0;            // exterior degree of the primitive vector
  std::size_t index = 0;  // position in primitive_basis(g, k)
  friend auto operator<=>(const ComponentKey&, const ComponentKey&) = default;
};

class StructuralClass {
 public:
  explicit StructuralClass(long genus) : genus_(genus) {}

  long genus() const { return genus_; }
  const std::map<ComponentKey, InvariantPolynomial>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }

  friend bool operator==(const StructuralClass&, const StructuralClass&) = default;

 private:
  friend StructuralClass canonical_class(
      long genus, const std::vector<std::pair<ExteriorElement, InvariantPolynomial>>& parts);

  long genus_;
  std::map<ComponentKey, InvariantPolynomial> components_;
};

using ClassRepresentative = std::vector<std::pair<ExteriorElement, InvariantPolynomial>>;

/// Σ e_i ⊗ p_i → canonical form: each e_i is Lefschetz-decomposed, γ^m moves
/// into the polynomial factor, and each polynomial is reduced mod I_{g-k}.
StructuralClass canonical_class(long genus, const ClassRepresentative& parts);

/// Σ (primitive vector) ⊗ (polynomial) representing x.
ClassRepresentative lift(const StructuralClass& x);

StructuralClass add_classes(const StructuralClass& x, const StructuralClass& y);
StructuralClass scale_class(const StructuralClass& x, const Rational& s);

/// Wedge the exterior parts, multiply the polynomial parts, canonicalize.
StructuralClass multiply_classes(const StructuralClass& x, const StructuralClass& y);

/// 0 when every component has even exterior degree (including the zero
/// class), 1 when all are odd, -1 when mixed.
int exterior_parity(const StructuralClass& x);

/// "(p1) * (a) + (1/2*p1p3 - 1/2*p2p4) * (1)"
std::string format_class(const StructuralClass& x);

}  // namespace moduli
