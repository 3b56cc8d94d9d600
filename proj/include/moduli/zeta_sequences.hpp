#pragma once

// The relation sequence ζ_n, its (t,u) closed form, the normalized relations
// ζ̂_{g,n} that make up the Gröbner basis, and the coefficient bookkeeping
// behind the degree-(2g+2) relation matrix.

#include <map>
#include <mutex>
#include <vector>

#include "moduli/exact_math.hpp"
#include "moduli/invariant_ring.hpp"

namespace moduli {

/// ζ_0 = 1, ζ_{n+1} = αζ_n + n²βζ_{n-1} + 2n(n-1)γζ_{n-2}.
/// Values are memoized process-wide (write-once, thread-safe).
InvariantPolynomial zeta_recursive(long n);

/// ζ̂_n = ζ_n / n!, zero for n < 0.
InvariantPolynomial zeta_normalized(long n);

/// Memo for the λ_{t,u} constants of the closed form. Each instance is
/// independently usable from one thread; fill order does not matter.
class LambdaTable {
 public:
  /// λ_{0,0} = 1, zero for negative indices, otherwise
  /// λ_{t,u} = (d-1)² λ_{t-1,u} + (d-1)(d-2) λ_{t,u-1} with d = 2t + 3u.
  Integer operator()(long t, long u);

  std::size_t cached_entries() const { return cache_.size(); }
  const std::map<std::pair<long, long>, Integer>& entries() const { return cache_; }

 private:
  std::map<std::pair<long, long>, Integer> cache_;
};

Integer lambda_coefficient(long t, long u, LambdaTable& cache);

/// ζ_g = Σ_{s+2t+3u=g} λ_{t,u} C(g,s) α^s β^t (2γ+αβ)^u.
InvariantPolynomial zeta_closed(long g);

/// ζ̂_{g,n} = Σ_{i=0}^{n} (1/i!) C(g-i, n-i) (2γ)^i β^{n-i} ζ̂_{g-n-i}.
/// Zero when n < 0, n > g, or g < 0.
InvariantPolynomial zhat_relation(long g, long n);

/// The same element via (-1)^n ζ̂_{g,n} = Σ_{i=0}^{n} (-1)^i {g-n, i} ζ̂_{n-i} ζ̂_{g+i}.
/// The sum stops at i = n because ζ̂_{n-i} vanishes beyond.
InvariantPolynomial zhat_relation_alt(long g, long n);

/// Odd genus only (EvenGenus otherwise):
/// 6γ ζ̂_{g,(g-3)/2} - ((g-1)/4) α² ζ̂_{g,(g-1)/2}, leading monomial γ^{(g+1)/2}
/// for g >= 3. Zero at g = 1.
InvariantPolynomial zhat_extra(long g);

struct RecurrenceFailure {
  long g = 0;
  long n = 0;
  bool alternate_form = false;
};

/// Checks n ζ̂_{g,n} = gβ ζ̂_{g-1,n-1} + 2γ ζ̂_{g-2,n-1} for 1 <= n <= g <= g_max,
/// for both constructions.
struct RecurrenceReport {
  std::size_t instances_checked = 0;
  std::vector<RecurrenceFailure> failures;
};
RecurrenceReport check_zhat_recurrence(long g_max);

struct CoefficientSum {
  Rational lhs;  // Σ_{2t+3u=d} μ_{t,u}(ζ_g)
  Rational rhs;  // C(g,d) D_d
};

/// Requires 0 <= d <= g.
CoefficientSum prop41_coefficient_sum(long g, long d);

/// The six degree-(2g+2) relations αζ_g, α²ζ_{g-1}, α³ζ_{g-2}, (2γ+αβ)ζ_{g-2},
/// βζ_{g-1}, αβζ_{g-2}, in that order.
std::vector<InvariantPolynomial> degree_2g_plus_2_relations(long g);

/// 6x6: rows are the (0,0), (0,1), (1,0), (2,0), (1,1) coefficients and the
/// (0,2)+(3,0) sum; column c is the c-th relation above. Requires g >= 5.
RationalMatrix relation_matrix(long g);

/// 12 (g-1) (g-2)^3 (g-3)^2 (g-4)
Integer relation_matrix_determinant_formula(long g);

}  // namespace moduli
