#pragma once

// Exact integer/rational arithmetic, the combinatorial number functions used
// throughout, and dense linear algebra over Q.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "moduli/error.hpp"

namespace moduli {

using Integer = mpz_class;
/// Always canonical: positive denominator, reduced, zero is 0/1.
using Rational = mpq_class;

/// "num/den", or "num" when den == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
/// Inverse of to_string; accepts optional leading sign and whitespace.
Rational parse_rational(std::string_view text);

/// n choose k. Zero outside 0 <= k <= n for n >= 0. A negative n uses the
/// polynomial extension n(n-1)...(n-k+1)/k!, which is what keeps the
/// binomial identities in the ζ-relation proofs valid for every index.
Integer binomial(long n, long k);

/// {k, i} = C(k+i, i) + C(k+i-1, i-1).
Integer oddbin(long k, long i);

/// d! * sum_{j=0}^{d} (-1)^j / j!
Integer derangement(long d);

Integer factorial(long n);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols,
                 std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(
      const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Rational>& entries() const { return entries_; }

  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RankKernel {
  std::size_t rank = 0;
  /// One column vector per free column, ascending; the free entry is 1.
  std::vector<std::vector<Rational>> kernel_basis;
};

/// Reduced row echelon form (pivots normalized to 1) with pivot columns.
struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

EchelonForm row_reduce(RationalMatrix m);
RankKernel rank_and_kernel(const RationalMatrix& m);

/// Fraction-free (Bareiss) elimination after clearing row denominators.
Rational determinant(const RationalMatrix& m);

/// Throws Singular for a rank-deficient square matrix.
RationalMatrix inverse(const RationalMatrix& m);

struct IdentityFailure {
  int identity = 0;  // 1..4
  long g = 0;
  long n = 0;
  long i = 0;
  Integer lhs;
  Integer rhs;
};

struct BinomialIdentityReport {
  std::size_t instances_checked = 0;
  std::vector<IdentityFailure> failures;
};

/// Evaluates both sides of a single instance of one of the four binomial
/// identities used for the ζ̂_{g,n} recurrence (numbered 1..4 as:
///   1. n{g-n,i} = (n-i)C(g-n+i,i) + (g+i)C(g-n+i-1,i-1)
///   2. g{g-n,i} = (g+i)C(g-n+i,i) + (n-i)C(g-n+i-1,i-1)
///   3. {g-n-1,i} = C(g-n+i,i) - C(g-n+i-2,i-2)
///   4. nC(g-i,n-i) = gC(g-1-i,n-1-i) + iC(g-1-i,n-i)).
std::pair<Integer, Integer> binomial_identity_sides(int identity, long g,
                                                    long n, long i);

/// Exhaustive over 1 <= g <= g_max and 0 <= n, i <= n_max.
BinomialIdentityReport verify_binomial_identities(long g_max, long n_max);

}  // namespace moduli
