#include "moduli/exterior.hpp"

#include <bit>
#include <cctype>
#include <mutex>
#include <unordered_map>

namespace moduli {

bool subset_less(Subset x, Subset y) {
  const int px = std::popcount(x), py = std::popcount(y);
  if (px != py) return px < py;
  if (x == y) return false;
  // The lowest differing index decides: whoever owns it has the smaller entry
  // at the first position where the sorted lists differ.
  const Subset diff = x ^ y;
  const Subset low = diff & (~diff + 1);
  return (x & low) != 0;
}

std::vector<long> subset_indices(Subset s) {
  std::vector<long> out;
  for (long i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i + 1);
  return out;
}

Subset subset_from_indices(const std::vector<long>& indices) {
  Subset s = 0;
  for (long i : indices) s |= Subset{1} << (i - 1);
  return s;
}

std::vector<Subset> subsets_of_size(long n, long k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  // Walk index combinations in lexicographic order.
  std::vector<long> idx(static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset s = 0;
    for (long i : idx) s |= Subset{1} << i;
    out.push_back(s);
    long pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (long i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

void check_exterior_genus(long genus) {
  if (genus < 1)
    throw Error(ErrorCode::InvalidArgument, "exterior algebra needs genus >= 1");
  if (genus > kMaxExteriorGenus)
    throw Error(ErrorCode::Capacity, "exterior algebra supports genus <= " +
                                         std::to_string(kMaxExteriorGenus) + ", got " +
                                         std::to_string(genus));
}

// ---------------------------------------------------------------------------

ExteriorElement::ExteriorElement(long genus) : genus_(genus) { check_exterior_genus(genus); }

ExteriorElement::ExteriorElement(long genus, Subset s, const Rational& coeff) : genus_(genus) {
  check_exterior_genus(genus);
  if (s >> (2 * genus) != 0)
    throw Error(ErrorCode::InvalidArgument, "ψ index exceeds 2g");
  add_term(s, coeff);
}

ExteriorElement ExteriorElement::psi(long genus, long i) {
  if (i < 1 || i > 2 * genus)
    throw Error(ErrorCode::InvalidArgument, "ψ index out of range: " + std::to_string(i));
  return {genus, Subset{1} << (i - 1)};
}

Rational ExteriorElement::coefficient(Subset s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool ExteriorElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  return std::popcount(terms_.begin()->first) == std::popcount(terms_.rbegin()->first);
}

long ExteriorElement::degree() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degree of zero exterior element");
  if (!is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, format_exterior(*this));
  return std::popcount(terms_.begin()->first);
}

ExteriorElement ExteriorElement::component(long k) const {
  ExteriorElement out(genus_);
  for (const auto& [s, c] : terms_)
    if (std::popcount(s) == k) out.terms_.emplace_hint(out.terms_.end(), s, c);
  return out;
}

void ExteriorElement::add_term(Subset s, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& other) {
  if (other.genus_ != genus_) throw Error(ErrorCode::GenusMismatch, "exterior sum");
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& other) {
  if (other.genus_ != genus_) throw Error(ErrorCode::GenusMismatch, "exterior difference");
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

ExteriorElement& ExteriorElement::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
  } else {
    for (auto& [s, c] : terms_) c *= scalar;
  }
  return *this;
}

std::vector<Rational> ExteriorElement::coordinates(long k) const {
  auto basis = subsets_of_size(2 * genus_, k);
  std::vector<Rational> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out[i] = coefficient(basis[i]);
  return out;
}

ExteriorElement ExteriorElement::from_coordinates(long genus, long k,
                                                  const std::vector<Rational>& coords) {
  auto basis = subsets_of_size(2 * genus, k);
  if (coords.size() != basis.size())
    throw Error(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
  ExteriorElement out(genus);
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], coords[i]);
  return out;
}

int wedge_sign(Subset x, Subset y) {
  if (x & y) return 0;
  int inversions = 0;
  for (Subset rest = y; rest != 0; rest &= rest - 1) {
    const Subset bit = rest & (~rest + 1);
    // Elements of x above this element of y must move past it.
    inversions += std::popcount(x & ~((bit << 1) - 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) {
  if (x.genus() != y.genus())
    throw Error(ErrorCode::GenusMismatch,
                std::to_string(x.genus()) + " vs " + std::to_string(y.genus()));
  ExteriorElement out(x.genus());
  for (const auto& [sx, cx] : x.terms())
    for (const auto& [sy, cy] : y.terms()) {
      const int sign = wedge_sign(sx, sy);
      if (sign == 0) continue;
      Rational c = cx * cy;
      if (sign < 0) c = -c;
      out.add_term(sx | sy, c);
    }
  return out;
}

ExteriorElement gamma_class(long genus) {
  ExteriorElement out(genus);
  for (long i = 1; i <= genus; ++i)
    out.add_term(subset_from_indices({i, i + genus}), 2);
  return out;
}

ExteriorElement gamma_power(long genus, long m) {
  ExteriorElement out = ExteriorElement::one(genus);
  const ExteriorElement gamma = gamma_class(genus);
  for (long i = 0; i < m && !out.is_zero(); ++i) out = wedge(out, gamma);
  return out;
}

RationalMatrix wedge_matrix(const ExteriorElement& left, long k) {
  const long g = left.genus();
  const long d = left.is_zero() ? 0 : left.degree();
  const auto cols = subsets_of_size(2 * g, k);
  const auto rows = subsets_of_size(2 * g, k + d);
  std::unordered_map<Subset, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [s, coeff] : left.terms()) {
      const int sign = wedge_sign(s, cols[c]);
      if (sign == 0) continue;
      Rational& entry = m(row_index.at(s | cols[c]), c);
      if (sign > 0)
        entry += coeff;
      else
        entry -= coeff;
    }
  return m;
}

Integer primitive_dimension_formula(long genus, long k) {
  return binomial(2 * genus, k) - binomial(2 * genus, k - 2);
}

namespace {

std::mutex primitive_mutex;
std::map<std::pair<long, long>, std::shared_ptr<const PrimitiveBasis>> primitive_cache;

std::shared_ptr<const PrimitiveBasis> compute_primitive_basis(long genus, long k) {
  auto basis = std::make_shared<PrimitiveBasis>();
  basis->genus = genus;
  basis->k = k;
  RankKernel rk = rank_and_kernel(wedge_matrix(gamma_power(genus, genus - k + 1), k));
  for (const auto& v : rk.kernel_basis)
    basis->vectors.push_back(ExteriorElement::from_coordinates(genus, k, v));
  if (Integer(static_cast<unsigned long>(basis->vectors.size())) !=
      primitive_dimension_formula(genus, k))
    throw Error(ErrorCode::InconsistentSystem,
                "primitive dimension mismatch at g=" + std::to_string(genus) +
                    ", k=" + std::to_string(k));
  return basis;
}

struct Decomposer {
  struct Block {
    long m;
    long j;
    std::size_t offset;
    std::shared_ptr<const PrimitiveBasis> basis;
  };
  std::vector<Block> blocks;
  RationalMatrix inverse_stack;
};

std::mutex decomposer_mutex;
std::map<std::pair<long, long>, std::shared_ptr<const Decomposer>> decomposer_cache;

std::shared_ptr<const Decomposer> compute_decomposer(long genus, long k) {
  auto dec = std::make_shared<Decomposer>();
  const std::size_t dim = subsets_of_size(2 * genus, k).size();
  std::vector<std::vector<Rational>> columns;
  for (long m = 0; k - 2 * m >= 0; ++m) {
    const long j = k - 2 * m;
    if (j > genus || m > genus - j) continue;
    auto basis = primitive_basis(genus, j);
    dec->blocks.push_back({m, j, columns.size(), basis});
    const ExteriorElement gm = gamma_power(genus, m);
    for (const auto& v : basis->vectors) columns.push_back(wedge(gm, v).coordinates(k));
  }
  if (columns.size() != dim)
    throw Error(ErrorCode::InconsistentSystem,
                "primitive pieces do not span Λ^" + std::to_string(k));
  RationalMatrix stack(dim, dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) stack(r, c) = columns[c][r];
  try {
    dec->inverse_stack = inverse(stack);
  } catch (const Error&) {
    throw Error(ErrorCode::InconsistentSystem,
                "primitive pieces are dependent in Λ^" + std::to_string(k));
  }
  return dec;
}

std::shared_ptr<const Decomposer> decomposer(long genus, long k) {
  auto key = std::make_pair(genus, k);
  {
    std::lock_guard lock(decomposer_mutex);
    if (auto it = decomposer_cache.find(key); it != decomposer_cache.end()) return it->second;
  }
  auto dec = compute_decomposer(genus, k);
  std::lock_guard lock(decomposer_mutex);
  return decomposer_cache.try_emplace(key, std::move(dec)).first->second;
}

}  // namespace

std::shared_ptr<const PrimitiveBasis> primitive_basis(long genus, long k) {
  check_exterior_genus(genus);
  if (k < 0 || k > genus)
    throw Error(ErrorCode::InvalidArgument, "primitive basis needs 0 <= k <= g");
  auto key = std::make_pair(genus, k);
  {
    std::lock_guard lock(primitive_mutex);
    if (auto it = primitive_cache.find(key); it != primitive_cache.end()) return it->second;
  }
  auto basis = compute_primitive_basis(genus, k);
  std::lock_guard lock(primitive_mutex);
  return primitive_cache.try_emplace(key, std::move(basis)).first->second;
}

std::vector<LefschetzPart> lefschetz_decompose(const ExteriorElement& x) {
  std::vector<LefschetzPart> out;
  if (x.is_zero()) return out;
  const long g = x.genus();
  const long k = x.degree();
  auto dec = decomposer(g, k);
  const std::vector<Rational> coords = dec->inverse_stack.apply(x.coordinates(k));
  for (const auto& block : dec->blocks) {
    LefschetzPart part{block.m, ExteriorElement(g), {}};
    bool nonzero = false;
    for (std::size_t i = 0; i < block.basis->vectors.size(); ++i) {
      const Rational& c = coords[block.offset + i];
      part.coordinates.push_back(c);
      if (sgn(c) == 0) continue;
      nonzero = true;
      part.primitive += block.basis->vectors[i] * c;
    }
    if (nonzero) out.push_back(std::move(part));
  }
  return out;
}

long lefschetz_dimension_sum(long genus, long k) {
  long total = 0;
  for (long m = 0; k - 2 * m >= 0; ++m) {
    const long j = k - 2 * m;
    if (j > genus || m > genus - j) continue;
    total += static_cast<long>(primitive_basis(genus, j)->vectors.size());
  }
  return total;
}

std::vector<MonomialDescriptor> basis_37(long genus, long n) {
  check_exterior_genus(genus);
  std::vector<MonomialDescriptor> out;
  for (long k = 0; k < genus && 3 * k <= n; ++k) {
    const auto subsets = subsets_of_size(2 * genus, k);
    for (long j = 0; j + k < genus && 3 * k + 4 * j <= n; ++j) {
      const long rest = n - 3 * k - 4 * j;
      if (rest % 2 != 0) continue;
      const long i = rest / 2;
      if (i + k >= genus) continue;
      for (Subset s : subsets) out.push_back({i, j, s});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string format_exterior(const ExteriorElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : x.terms()) {
    const bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    Rational magnitude = abs(c);
    if (s == 0) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      for (long i : subset_indices(s)) out += "p" + std::to_string(i);
    }
    first = false;
  }
  return out;
}

ExteriorElement parse_exterior(long genus, std::string_view text) {
  ExteriorElement result(genus);
  std::size_t pos = 0;
  auto at_end = [&] { return pos >= text.size(); };
  auto skip_ws = [&] {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&]() -> Integer {
    std::size_t start = pos;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError(pos, "expected digits");
    return Integer(std::string(text.substr(start, pos - start)));
  };
  skip_ws();
  if (at_end()) throw ParseError(pos, "empty exterior element");
  bool first = true;
  while (true) {
    skip_ws();
    Rational coeff = 1;
    if (!at_end() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') coeff = -1;
      ++pos;
    } else if (!first) {
      throw ParseError(pos, "expected '+' or '-'");
    }
    // A term is a product of factors: rationals and runs of p<index>.
    ExteriorElement term = ExteriorElement::one(genus);
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (at_end()) throw ParseError(pos, "expected factor");
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        Integer num = digits();
        Integer den = 1;
        skip_ws();
        if (!at_end() && text[pos] == '/') {
          ++pos;
          skip_ws();
          std::size_t den_pos = pos;
          den = digits();
          if (den == 0) throw ParseError(den_pos, "zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        coeff *= q;
      } else if (text[pos] == 'p') {
        while (!at_end() && text[pos] == 'p') {
          ++pos;
          std::size_t index_pos = pos;
          Integer index = digits();
          if (index < 1 || index > 2 * genus)
            throw ParseError(index_pos, "ψ index out of range for genus " + std::to_string(genus));
          term = wedge(term, ExteriorElement::psi(genus, index.get_si()));
        }
      } else {
        throw ParseError(pos, std::string("unexpected character '") + text[pos] + "'");
      }
      have_factor = true;
      skip_ws();
      if (!at_end() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) throw ParseError(pos, "empty term");
    result += term * coeff;
    first = false;
    skip_ws();
    if (at_end()) break;
  }
  return result;
}

}  // namespace moduli
