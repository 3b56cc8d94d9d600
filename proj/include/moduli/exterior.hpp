#pragma once

// Λ*H³ on ψ_1..ψ_{2g}, the class γ = 2 Σ ψ_i ψ_{i+g}, and its primitive
// (Lefschetz-type) decomposition.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "moduli/exact_math.hpp"

namespace moduli {

/// Largest genus accepted by exterior-algebra operations (dim Λ* = 4^g).
inline constexpr long kMaxExteriorGenus = 6;

/// Bit i-1 set means ψ_i is present; indices ascend within a term.
using Subset = std::uint32_t;

/// Graded-lex order on subsets: size first, then lexicographic on the sorted
/// index lists.
bool subset_less(Subset x, Subset y);

struct SubsetOrder {
  bool operator()(Subset x, Subset y) const { return subset_less(x, y); }
};

std::vector<long> subset_indices(Subset s);  // 1-based, ascending
Subset subset_from_indices(const std::vector<long>& indices);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<Subset> subsets_of_size(long n, long k);

class ExteriorElement {
 public:
  using TermMap = std::map<Subset, Rational, SubsetOrder>;

  explicit ExteriorElement(long genus);
  ExteriorElement(long genus, Subset s, const Rational& coeff = 1);

  static ExteriorElement one(long genus) { return {genus, 0}; }
  /// ψ_i, 1 <= i <= 2g.
  static ExteriorElement psi(long genus, long i);

  long genus() const { return genus_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Subset s) const;

  bool is_homogeneous() const;
  /// Exterior degree (subset size) of a nonzero homogeneous element.
  long degree() const;
  /// The part of exterior degree k.
  ExteriorElement component(long k) const;

  void add_term(Subset s, const Rational& coeff);

  ExteriorElement& operator+=(const ExteriorElement& other);
  ExteriorElement& operator-=(const ExteriorElement& other);
  ExteriorElement& operator*=(const Rational& scalar);

  friend ExteriorElement operator+(ExteriorElement x, const ExteriorElement& y) { return x += y; }
  friend ExteriorElement operator-(ExteriorElement x, const ExteriorElement& y) { return x -= y; }
  friend ExteriorElement operator*(ExteriorElement x, const Rational& s) { return x *= s; }
  friend bool operator==(const ExteriorElement& x, const ExteriorElement& y) {
    return x.genus_ == y.genus_ && x.terms_ == y.terms_;
  }

  /// Coordinates of the degree-k part against subsets_of_size(2g, k).
  std::vector<Rational> coordinates(long k) const;
  static ExteriorElement from_coordinates(long genus, long k, const std::vector<Rational>& coords);

 private:
  long genus_;
  TermMap terms_;
};

/// Sign of e_x ∧ e_y relative to e_{x ∪ y}; 0 when the subsets overlap.
int wedge_sign(Subset x, Subset y);

/// Throws GenusMismatch when genera differ.
ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y);

ExteriorElement gamma_class(long genus);
ExteriorElement gamma_power(long genus, long m);

/// Matrix of y ↦ left ∧ y from Λ^k to Λ^{k + deg(left)}, bases in
/// subsets_of_size order. left must be homogeneous.
RationalMatrix wedge_matrix(const ExteriorElement& left, long k);

/// Λ₀^k = ker(γ^{g-k+1} : Λ^k → Λ^{2g-k+2}) for 0 <= k <= g.
struct PrimitiveBasis {
  long genus = 0;
  long k = 0;
  std::vector<ExteriorElement> vectors;
};

/// Cached per (g, k); basis vectors come from the RREF kernel.
std::shared_ptr<const PrimitiveBasis> primitive_basis(long genus, long k);

/// C(2g,k) - C(2g,k-2)
Integer primitive_dimension_formula(long genus, long k);

struct LefschetzPart {
  long m = 0;                          // power of γ
  ExteriorElement primitive;           // in Λ₀^{k-2m}
  std::vector<Rational> coordinates;   // against primitive_basis(g, k-2m)
};

/// x = Σ_m γ^m ∧ x_m with x_m primitive. x must be homogeneous; only nonzero
/// parts are returned, ascending in m. A zero x yields an empty list.
std::vector<LefschetzPart> lefschetz_decompose(const ExteriorElement& x);

/// Σ dim Λ₀^{k-2m} over 0 <= k-2m and m <= g-(k-2m), using computed kernels.
long lefschetz_dimension_sum(long genus, long k);

/// α^i β^j ψ_{i_1}..ψ_{i_k} with i+k < g, j+k < g and 2i + 4j + 3k = n.
struct MonomialDescriptor {
  long i = 0;
  long j = 0;
  Subset psi = 0;
};
std::vector<MonomialDescriptor> basis_37(long genus, long n);

/// "2*p1p3 + 2*p2p4"; "1" for the unit.
std::string format_exterior(const ExteriorElement& x);
ExteriorElement parse_exterior(long genus, std::string_view text);

void check_exterior_genus(long genus);

}  // namespace moduli
