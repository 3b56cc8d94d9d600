#include "moduli/exact_math.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace moduli {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EvenGenus: return "EvenGenus";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::Capacity: return "Capacity";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool parse_integer(std::string_view digits, Integer& out) {
  if (digits.empty()) return false;
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  out.set_str(std::string(digits), 10);
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip();
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  std::string_view body = text.substr(pos, end - pos);
  auto slash = body.find('/');
  Integer num, den = 1;
  if (!parse_integer(body.substr(0, slash), num))
    throw ParseError(pos, "expected integer numerator");
  if (slash != std::string_view::npos) {
    if (!parse_integer(body.substr(slash + 1), den))
      throw ParseError(pos + slash + 1, "expected integer denominator");
    if (den == 0) throw ParseError(pos + slash + 1, "zero denominator");
  }
  Rational q(negative ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Integer result;
  Integer top = n;
  mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

Integer oddbin(long k, long i) {
  return binomial(k + i, i) + binomial(k + i - 1, i - 1);
}

Integer factorial(long n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "factorial of negative");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer derangement(long d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "derangement of negative");
  // d!/j! accumulated downward: d!/d! = 1, d!/(d-1)! = d, ...
  Integer sum = 0;
  Integer term = 1;
  for (long j = d; j >= 0; --j) {
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
    term *= j;
  }
  return sum;
}

// ---------------------------------------------------------------------------

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols,
                               std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorCode::InvalidArgument, "matrix entry count mismatch");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_)
    throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

EchelonForm row_reduce(RationalMatrix m) {
  EchelonForm result;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && sgn(m(r, c)) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));
    Rational inv = 1 / m(pivot_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || sgn(m(i, c)) == 0) continue;
      Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(pivot_row, j)) != 0) m(i, j) -= factor * m(pivot_row, j);
    }
    result.pivot_columns.push_back(c);
    ++pivot_row;
  }
  result.reduced = std::move(m);
  return result;
}

RankKernel rank_and_kernel(const RationalMatrix& m) {
  EchelonForm ef = row_reduce(m);
  RankKernel out;
  out.rank = ef.pivot_columns.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ef.pivot_columns) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < ef.pivot_columns.size(); ++r)
      v[ef.pivot_columns[r]] = -ef.reduced(r, f);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Scale each row to integers; det(m) = det(scaled) / prod(scales).
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    scale *= row_lcm;
    for (std::size_t c = 0; c < n; ++c)
      a[r * n + c] = m(r, c).get_num() * (row_lcm / m(r, c).get_den());
  }
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = v;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rational det(at(n - 1, n - 1) * sign, scale);
  det.canonicalize();
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::NonSquare, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  EchelonForm ef = row_reduce(std::move(aug));
  if (ef.pivot_columns.size() < n || (n > 0 && ef.pivot_columns[n - 1] != n - 1))
    throw Error(ErrorCode::Singular, "matrix is not invertible");
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = ef.reduced(r, n + c);
  return out;
}

// ---------------------------------------------------------------------------

std::pair<Integer, Integer> binomial_identity_sides(int identity, long g, long n,
                                                    long i) {
  switch (identity) {
    case 1:
      return {n * oddbin(g - n, i),
              (n - i) * binomial(g - n + i, i) +
                  (g + i) * binomial(g - n + i - 1, i - 1)};
    case 2:
      return {g * oddbin(g - n, i),
              (g + i) * binomial(g - n + i, i) +
                  (n - i) * binomial(g - n + i - 1, i - 1)};
    case 3:
      return {oddbin(g - n - 1, i),
              binomial(g - n + i, i) - binomial(g - n + i - 2, i - 2)};
    case 4:
      return {n * binomial(g - i, n - i),
              g * binomial(g - 1 - i, n - 1 - i) + i * binomial(g - 1 - i, n - i)};
    default:
      throw Error(ErrorCode::InvalidArgument, "identity index must be 1..4");
  }
}

BinomialIdentityReport verify_binomial_identities(long g_max, long n_max) {
  BinomialIdentityReport report;
  for (int id = 1; id <= 4; ++id)
    for (long g = 1; g <= g_max; ++g)
      for (long n = 0; n <= n_max; ++n)
        for (long i = 0; i <= n_max; ++i) {
          auto [lhs, rhs] = binomial_identity_sides(id, g, n, i);
          ++report.instances_checked;
          if (lhs != rhs) report.failures.push_back({id, g, n, i, lhs, rhs});
        }
  return report;
}

}  // namespace moduli
