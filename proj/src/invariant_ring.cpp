#include "moduli/invariant_ring.hpp"

#include <cctype>

namespace moduli {

InvariantPolynomial::InvariantPolynomial(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

InvariantPolynomial::InvariantPolynomial(const Monomial& m, const Rational& coeff) {
  if (sgn(coeff) != 0) terms_.emplace(m, coeff);
}

Rational InvariantPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Monomial, Rational> InvariantPolynomial::leading_term() const {
  if (terms_.empty())
    throw Error(ErrorCode::ZeroPolynomial, "leading term of zero polynomial");
  return *terms_.begin();
}

bool InvariantPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  // Terms are sorted by degree first, so the extremes bound every degree.
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::uint32_t InvariantPolynomial::degree() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degree of zero polynomial");
  if (!is_homogeneous())
    throw Error(ErrorCode::NotHomogeneous, format_poly(*this));
  return terms_.begin()->first.degree();
}

bool InvariantPolynomial::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

void InvariantPolynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

InvariantPolynomial& InvariantPolynomial::operator+=(const InvariantPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

InvariantPolynomial& InvariantPolynomial::operator-=(const InvariantPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

InvariantPolynomial& InvariantPolynomial::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= scalar;
  }
  return *this;
}

InvariantPolynomial& InvariantPolynomial::operator*=(const InvariantPolynomial& other) {
  return *this = *this * other;
}

InvariantPolynomial operator*(const InvariantPolynomial& x, const InvariantPolynomial& y) {
  InvariantPolynomial out;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) out.add_term(mx * my, cx * cy);
  return out;
}

InvariantPolynomial InvariantPolynomial::shifted(const Monomial& m,
                                                 const Rational& coeff) const {
  InvariantPolynomial out;
  if (sgn(coeff) == 0) return out;
  // Multiplying by a monomial preserves the order, so hint at the end.
  for (const auto& [mx, cx] : terms_) out.terms_.emplace_hint(out.terms_.end(), mx * m, cx * coeff);
  return out;
}

InvariantPolynomial pow(const InvariantPolynomial& base, unsigned exponent) {
  InvariantPolynomial result(Rational(1));
  InvariantPolynomial square = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

std::vector<std::pair<std::uint32_t, InvariantPolynomial>> homogeneous_components(
    const InvariantPolynomial& p) {
  std::vector<std::pair<std::uint32_t, InvariantPolynomial>> out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (out.empty() || out.back().first != m.degree())
      out.emplace_back(m.degree(), InvariantPolynomial{});
    out.back().second.add_term(m, c);
  }
  return out;
}

// ---------------------------------------------------------------------------

MuTable to_mu_coefficients(const InvariantPolynomial& p) {
  MuTable table;
  if (p.is_zero()) return table;
  if (!p.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, format_poly(p));
  // γ = (c - αβ)/2, so α^i β^j γ^k expands to
  //   Σ_r C(k,r) (-1)^{k-r} 2^{-k} α^{i+k-r} β^{j+k-r} c^r.
  for (const auto& [m, coeff] : p.terms()) {
    Integer two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, m.c);
    for (std::uint32_t r = 0; r <= m.c; ++r) {
      Rational term(binomial(m.c, r), two_k);
      term.canonicalize();
      if ((m.c - r) % 2 == 1) term = -term;
      MuKey key{m.b + m.c - r, r};
      Rational& slot = table[key];
      slot += coeff * term;
      if (sgn(slot) == 0) table.erase(key);
    }
  }
  return table;
}

InvariantPolynomial from_mu_coefficients(const MuTable& table, std::uint32_t g) {
  const InvariantPolynomial c_poly =
      InvariantPolynomial(Monomial{0, 0, 1}, 2) + InvariantPolynomial(Monomial{1, 1, 0});
  InvariantPolynomial out;
  for (const auto& [key, mu] : table) {
    long s = static_cast<long>(g) - 2L * key.t - 3L * key.u;
    if (s < 0)
      throw Error(ErrorCode::InvalidArgument,
                  "(t,u) entry does not fit half-degree " + std::to_string(g));
    out += pow(c_poly, key.u).shifted(Monomial{static_cast<std::uint32_t>(s), key.t, 0}, mu);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string format_monomial(const Monomial& m) {
  std::string out;
  auto factor = [&](char var, std::uint32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += '^' + std::to_string(e);
  };
  factor('a', m.a);
  factor('b', m.b);
  factor('g', m.c);
  return out.empty() ? "1" : out;
}

std::string format_poly(const InvariantPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Rational magnitude = abs(c);
    const bool constant = m == Monomial{};
    if (constant) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += format_monomial(m);
    }
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  InvariantPolynomial parse() {
    InvariantPolynomial result;
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      Rational sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      result += parse_term() * sign;
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t parse_exponent() {
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    Integer e = parse_digits();
    if (!e.fits_uint_p() || e > 100000) throw ParseError(start, "exponent too large");
    return static_cast<std::uint32_t>(e.get_ui());
  }

  InvariantPolynomial parse_term() {
    Rational coeff = 1;
    Monomial mono;
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (at_end()) throw ParseError(pos_, "expected factor");
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        Integer num = parse_digits();
        Integer den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_ws();
          std::size_t den_pos = pos_;
          den = parse_digits();
          if (den == 0) throw ParseError(den_pos, "zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        coeff *= q;
      } else if (ch == 'a' || ch == 'b' || ch == 'g') {
        ++pos_;
        std::uint32_t e = parse_exponent();
        if (ch == 'a') mono.a += e;
        if (ch == 'b') mono.b += e;
        if (ch == 'g') mono.c += e;
      } else {
        throw ParseError(pos_, std::string("unexpected character '") + ch + "'");
      }
      have_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) throw ParseError(pos_, "empty term");
    return InvariantPolynomial(mono, coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

InvariantPolynomial parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace moduli
