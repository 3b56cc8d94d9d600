#include "moduli/zeta_sequences.hpp"

#include <string>

namespace moduli {

namespace {

std::mutex zeta_mutex;
std::vector<InvariantPolynomial>& zeta_memo() {
  static std::vector<InvariantPolynomial> memo{InvariantPolynomial(Rational(1))};
  return memo;
}

const Monomial kAlpha{1, 0, 0};
const Monomial kBeta{0, 1, 0};
const Monomial kGamma{0, 0, 1};

}  // namespace

InvariantPolynomial zeta_recursive(long n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "ζ_n needs n >= 0");
  std::lock_guard lock(zeta_mutex);
  auto& memo = zeta_memo();
  while (static_cast<long>(memo.size()) <= n) {
    const long m = static_cast<long>(memo.size()) - 1;  // computing ζ_{m+1}
    InvariantPolynomial next = memo[m].shifted(kAlpha, 1);
    if (m >= 1) next += memo[m - 1].shifted(kBeta, Rational(m * m));
    if (m >= 2) next += memo[m - 2].shifted(kGamma, Rational(2 * m * (m - 1)));
    if (!next.has_integer_coefficients())
      throw Error(ErrorCode::InvalidArgument, "ζ_" + std::to_string(m + 1) +
                                                  " has a non-integer coefficient");
    memo.push_back(std::move(next));
  }
  return memo[n];
}

InvariantPolynomial zeta_normalized(long n) {
  if (n < 0) return {};
  return zeta_recursive(n) * Rational(Integer(1), factorial(n));
}

Integer LambdaTable::operator()(long t, long u) {
  if (t < 0 || u < 0) return 0;
  if (t == 0 && u == 0) return 1;
  auto key = std::make_pair(t, u);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const long d = 2 * t + 3 * u;
  Integer value = Integer((d - 1) * (d - 1)) * (*this)(t - 1, u) +
                  Integer((d - 1) * (d - 2)) * (*this)(t, u - 1);
  cache_.emplace(key, value);
  return value;
}

Integer lambda_coefficient(long t, long u, LambdaTable& cache) { return cache(t, u); }

InvariantPolynomial zeta_closed(long g) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "ζ_g needs g >= 0");
  LambdaTable lambda;
  MuTable table;
  for (long u = 0; 3 * u <= g; ++u)
    for (long t = 0; 2 * t + 3 * u <= g; ++t) {
      const long s = g - 2 * t - 3 * u;
      table[MuKey{static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(u)}] =
          Rational(lambda(t, u) * binomial(g, s));
    }
  return from_mu_coefficients(table, static_cast<std::uint32_t>(g));
}

InvariantPolynomial zhat_relation(long g, long n) {
  if (g < 0 || n < 0 || n > g) return {};
  InvariantPolynomial result;
  Integer two_pow = 1;
  for (long i = 0; i <= n; ++i) {
    if (i > 0) two_pow *= 2;
    InvariantPolynomial lower = zeta_normalized(g - n - i);
    if (lower.is_zero()) continue;
    Rational coeff(binomial(g - i, n - i) * two_pow, factorial(i));
    coeff.canonicalize();
    result += lower.shifted(Monomial{0, static_cast<std::uint32_t>(n - i),
                                     static_cast<std::uint32_t>(i)},
                            coeff);
  }
  return result;
}

InvariantPolynomial zhat_relation_alt(long g, long n) {
  if (g < 0 || n < 0) return {};
  InvariantPolynomial result;
  for (long i = 0; i <= n; ++i) {
    Integer weight = oddbin(g - n, i);
    if (weight == 0) continue;
    if (i % 2 == 1) weight = -weight;
    result += zeta_normalized(n - i) * zeta_normalized(g + i) * Rational(weight);
  }
  if (n % 2 == 1) result *= Rational(-1);
  return result;
}

namespace {
Rational quarter(long n) {
  Rational q(n, 4);
  q.canonicalize();
  return q;
}
}  // namespace

InvariantPolynomial zhat_extra(long g) {
  if (g < 1 || g % 2 == 0)
    throw Error(ErrorCode::EvenGenus, "extra element needs odd g >= 1, got " +
                                          std::to_string(g));
  InvariantPolynomial first = zhat_relation(g, (g - 3) / 2).shifted(kGamma, 6);
  InvariantPolynomial second =
      zhat_relation(g, (g - 1) / 2).shifted(Monomial{2, 0, 0}, quarter(g - 1));
  InvariantPolynomial result = first - second;
  if (g >= 3) {
    const Monomial expected{0, 0, static_cast<std::uint32_t>((g + 1) / 2)};
    if (result.is_zero() || !(result.leading_term().first == expected))
      throw Error(ErrorCode::InvalidArgument,
                  "extra element has unexpected leading monomial at g=" + std::to_string(g));
  }
  return result;
}

RecurrenceReport check_zhat_recurrence(long g_max) {
  RecurrenceReport report;
  for (int alt = 0; alt < 2; ++alt) {
    auto zhat = [alt](long g, long n) {
      return alt ? zhat_relation_alt(g, n) : zhat_relation(g, n);
    };
    for (long g = 1; g <= g_max; ++g)
      for (long n = 1; n <= g; ++n) {
        InvariantPolynomial lhs = zhat(g, n) * Rational(n);
        InvariantPolynomial rhs = zhat(g - 1, n - 1).shifted(kBeta, Rational(g)) +
                                  zhat(g - 2, n - 1).shifted(kGamma, 2);
        ++report.instances_checked;
        if (!(lhs == rhs)) report.failures.push_back({g, n, alt == 1});
      }
  }
  return report;
}

CoefficientSum prop41_coefficient_sum(long g, long d) {
  if (d < 0 || d > g)
    throw Error(ErrorCode::InvalidArgument, "coefficient sum needs 0 <= d <= g");
  MuTable table = to_mu_coefficients(zeta_recursive(g));
  CoefficientSum out;
  for (const auto& [key, mu] : table)
    if (2 * static_cast<long>(key.t) + 3 * static_cast<long>(key.u) == d) out.lhs += mu;
  out.rhs = Rational(binomial(g, d) * derangement(d));
  return out;
}

std::vector<InvariantPolynomial> degree_2g_plus_2_relations(long g) {
  if (g < 2) throw Error(ErrorCode::GenusTooSmall, "relations need g >= 2");
  const InvariantPolynomial z0 = zeta_recursive(g);
  const InvariantPolynomial z1 = zeta_recursive(g - 1);
  const InvariantPolynomial z2 = zeta_recursive(g - 2);
  const InvariantPolynomial c =
      InvariantPolynomial(kGamma, 2) + InvariantPolynomial(Monomial{1, 1, 0});
  return {
      z0.shifted(kAlpha, 1),
      z1.shifted(Monomial{2, 0, 0}, 1),
      z2.shifted(Monomial{3, 0, 0}, 1),
      c * z2,
      z1.shifted(kBeta, 1),
      z2.shifted(Monomial{1, 1, 0}, 1),
  };
}

RationalMatrix relation_matrix(long g) {
  if (g < 5)
    throw Error(ErrorCode::GenusTooSmall, "relation matrix needs g >= 5, got " +
                                              std::to_string(g));
  auto relations = degree_2g_plus_2_relations(g);
  RationalMatrix m(6, 6);
  for (std::size_t col = 0; col < relations.size(); ++col) {
    MuTable mu = to_mu_coefficients(relations[col]);
    auto at = [&mu](std::uint32_t t, std::uint32_t u) {
      auto it = mu.find(MuKey{t, u});
      return it == mu.end() ? Rational(0) : it->second;
    };
    m(0, col) = at(0, 0);
    m(1, col) = at(0, 1);
    m(2, col) = at(1, 0);
    m(3, col) = at(2, 0);
    m(4, col) = at(1, 1);
    m(5, col) = at(0, 2) + at(3, 0);
  }
  return m;
}

Integer relation_matrix_determinant_formula(long g) {
  Integer g1 = g - 1, g2 = g - 2, g3 = g - 3, g4 = g - 4;
  return Integer(12) * g1 * g2 * g2 * g2 * g3 * g3 * g4;
}

}  // namespace moduli
