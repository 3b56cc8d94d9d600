#pragma once

// The verify-all harness: every identity the library certifies, run at
// bounds capped by g_max, with seeded randomized property checks.

#include <cstdint>
#include <string>
#include <vector>

#include "moduli/json_io.hpp"

namespace moduli {

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr long kDefaultVerifyGenus = 8;

struct CheckResult {
  std::string name;
  std::string parameters;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  long g_max = 0;
  std::uint64_t seed = 0;
  /// Sorted by name, then parameters (numbers compared by value).
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

/// Each family runs up to min(its natural bound, g_max):
///   zeta closed form n <= 20, ζ̂ equivalence g <= 14, ζ̂ recurrence g <= 14,
///   binomial identities <= 12, leading monomials g <= 14, Gröbner
///   certificates and standard monomials g <= 8, series forms g <= 16,
///   series identities g <= 12, ideal membership g <= 8 (γ powers g <= 6),
///   relation matrix 5 <= g <= 40, coefficient sums d <= 30 and g <= 20,
///   primitive dimensions g <= 4, basis counts g <= 6, class arithmetic g <= 3.
/// threads = 0 reads MODULI_RING_THREADS, else uses the hardware count.
VerificationReport verify_all(long g_max, std::uint64_t seed, unsigned threads = 0);

std::string format_report(const VerificationReport& report);
Json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

/// The degree-(2g+2) relation matrix written out entry by entry in closed form.
RationalMatrix printed_relation_matrix(long g);

/// {α^i β^j γ^p : i + 2p < g, j + 2p < g}, ascending in the monomial order.
std::vector<Monomial> expected_standard_monomials(long g);

/// Numeric-aware string comparison ("g=2" < "g=10").
bool natural_less(const std::string& x, const std::string& y);

}  // namespace moduli
