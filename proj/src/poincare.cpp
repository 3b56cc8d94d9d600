#include "moduli/poincare.hpp"

#include <string>

namespace moduli {

SeriesPolynomial::SeriesPolynomial(const Integer& constant) { add_term(0, constant); }

SeriesPolynomial SeriesPolynomial::monomial(long exponent, const Integer& coeff) {
  SeriesPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

SeriesPolynomial SeriesPolynomial::one_minus_t_pow(long k) {
  SeriesPolynomial p = monomial(0, 1);
  p.add_term(k, -1);
  return p;
}

Integer SeriesPolynomial::coefficient(long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

long SeriesPolynomial::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
long SeriesPolynomial::low_degree() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first; }

bool SeriesPolynomial::is_palindromic() const {
  const long top = degree();
  for (const auto& [e, c] : coeffs_)
    if (coefficient(top - e) != c) return false;
  return true;
}

Rational SeriesPolynomial::evaluate(const Rational& t) const {
  Rational sum = 0;
  Rational power = 1;
  long current = 0;
  for (const auto& [e, c] : coeffs_) {
    while (current < e) {
      power *= t;
      ++current;
    }
    sum += power * Rational(c);
  }
  return sum;
}

void SeriesPolynomial::add_term(long exponent, const Integer& coeff) {
  if (exponent < 0)
    throw Error(ErrorCode::InvalidArgument, "negative exponent in series polynomial");
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

SeriesPolynomial& SeriesPolynomial::operator+=(const SeriesPolynomial& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

SeriesPolynomial& SeriesPolynomial::operator-=(const SeriesPolynomial& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
  return *this;
}

SeriesPolynomial& SeriesPolynomial::operator*=(const SeriesPolynomial& other) {
  return *this = *this * other;
}

SeriesPolynomial operator*(const SeriesPolynomial& x, const SeriesPolynomial& y) {
  SeriesPolynomial out;
  for (const auto& [ex, cx] : x.coeffs_)
    for (const auto& [ey, cy] : y.coeffs_) out.add_term(ex + ey, cx * cy);
  return out;
}

SeriesPolynomial SeriesPolynomial::shifted(long k) const {
  SeriesPolynomial out;
  for (const auto& [e, c] : coeffs_) out.add_term(e + k, c);
  return out;
}

SeriesPolynomial pow(const SeriesPolynomial& base, unsigned exponent) {
  SeriesPolynomial result = SeriesPolynomial::monomial(0, 1);
  SeriesPolynomial square = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

SeriesPolynomial divide_exact(const SeriesPolynomial& numerator,
                              const SeriesPolynomial& denominator) {
  if (denominator.is_zero()) throw Error(ErrorCode::InexactDivision, "division by zero");
  const long dd = denominator.degree();
  const Integer lead = denominator.coefficient(dd);
  SeriesPolynomial rem = numerator;
  SeriesPolynomial quotient;
  while (!rem.is_zero() && rem.degree() >= dd) {
    const long rd = rem.degree();
    const Integer top = rem.coefficient(rd);
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw Error(ErrorCode::InexactDivision, "non-integral quotient coefficient");
    Integer q = top / lead;
    quotient.add_term(rd - dd, q);
    for (const auto& [e, c] : denominator.coefficients()) rem.add_term(e + rd - dd, -q * c);
  }
  if (!rem.is_zero())
    throw Error(ErrorCode::InexactDivision,
                format_series(numerator) + " by " + format_series(denominator));
  return quotient;
}

std::string format_series(const SeriesPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.coefficients()) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    Integer magnitude = abs(c);
    if (e == 0) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
    first = false;
  }
  return out;
}

namespace {

SeriesPolynomial free_denominator() {
  return SeriesPolynomial::one_minus_t_pow(2) * SeriesPolynomial::one_minus_t_pow(4);
}

}  // namespace

SeriesPolynomial truncated_free_series(long m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "truncated series needs m >= 0");
  return divide_exact(SeriesPolynomial::one_minus_t_pow(2 * m) *
                          SeriesPolynomial::one_minus_t_pow(4 * m),
                      free_denominator());
}

SeriesPolynomial poincare_full(long g, FullForm form) {
  if (g < 2) throw Error(ErrorCode::GenusTooSmall, "P(N_g) needs g >= 2");
  const unsigned two_g = static_cast<unsigned>(2 * g);
  switch (form) {
    case FullForm::Harder: {
      SeriesPolynomial one_plus_t3 = SeriesPolynomial::monomial(0, 1) + SeriesPolynomial::monomial(3, 1);
      SeriesPolynomial one_plus_t = SeriesPolynomial::monomial(0, 1) + SeriesPolynomial::monomial(1, 1);
      SeriesPolynomial numerator = pow(one_plus_t3, two_g) - pow(one_plus_t, two_g).shifted(2 * g);
      return divide_exact(numerator, free_denominator());
    }
    case FullForm::Monomial: {
      SeriesPolynomial sum;
      for (long k = 0; k < g; ++k)
        sum += (truncated_free_series(g - k) * SeriesPolynomial(binomial(2 * g, k))).shifted(3 * k);
      return sum;
    }
    case FullForm::Binomial: {
      SeriesPolynomial numerator;
      for (long k = 0; k <= 2 * g; ++k) {
        Integer c = binomial(2 * g, k);
        numerator.add_term(3 * k, c);
        numerator.add_term(2 * g + k, -c);
      }
      return divide_exact(numerator, free_denominator());
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown form");
}

SeriesPolynomial poincare_invariant(long g, InvariantForm form) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "P_I(N_g) needs g >= 0");
  switch (form) {
    case InvariantForm::Product: {
      SeriesPolynomial numerator = SeriesPolynomial::one_minus_t_pow(2 * g) *
                                   SeriesPolynomial::one_minus_t_pow(2 * g + 2) *
                                   SeriesPolynomial::one_minus_t_pow(2 * g + 4);
      return divide_exact(numerator, free_denominator() * SeriesPolynomial::one_minus_t_pow(6));
    }
    case InvariantForm::Sum: {
      SeriesPolynomial sum;
      for (long p = 0; 2 * p <= g; ++p) sum += truncated_free_series(g - 2 * p).shifted(6 * p);
      return sum;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown form");
}

Integer betti(long g, long n) { return poincare_full(g).coefficient(n); }

SeriesIdentityReport check_series_identities(long g_max) {
  SeriesIdentityReport report;
  for (long g = 2; g <= g_max; ++g) {
    SeriesPolynomial lhs = poincare_invariant(g) - poincare_invariant(g - 2).shifted(6);
    ++report.instances_checked;
    if (!(lhs == truncated_free_series(g))) report.failures.push_back({"invariant-recurrence", g});

    SeriesPolynomial conv_lhs, conv_rhs;
    for (long k = 0; k < g; ++k) {
      Integer weight = binomial(2 * g, k) - binomial(2 * g, k - 2);
      conv_lhs += (poincare_invariant(g - k) * SeriesPolynomial(weight)).shifted(3 * k);
      conv_rhs += (truncated_free_series(g - k) * SeriesPolynomial(binomial(2 * g, k))).shifted(3 * k);
    }
    ++report.instances_checked;
    if (!(conv_lhs == conv_rhs)) report.failures.push_back({"primitive-convolution", g});
  }
  return report;
}

}  // namespace moduli
