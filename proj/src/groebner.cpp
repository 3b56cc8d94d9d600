#include "moduli/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "moduli/zeta_sequences.hpp"

namespace moduli {

std::pair<Monomial, Rational> leading_monomial(const InvariantPolynomial& p) {
  return p.leading_term();
}

InvariantPolynomial normal_form(const InvariantPolynomial& p,
                                const std::vector<InvariantPolynomial>& basis) {
  std::vector<std::pair<Monomial, Rational>> leads;
  leads.reserve(basis.size());
  for (const auto& b : basis) leads.push_back(b.leading_term());

  InvariantPolynomial work = p;
  InvariantPolynomial remainder;
  while (!work.is_zero()) {
    auto [m, c] = work.leading_term();
    auto divisor = std::find_if(leads.begin(), leads.end(),
                                [&m](const auto& lead) { return lead.first.divides(m); });
    if (divisor == leads.end()) {
      remainder.add_term(m, c);
      work.add_term(m, -c);
      continue;
    }
    const auto& b = basis[static_cast<std::size_t>(divisor - leads.begin())];
    work -= b.shifted(m / divisor->first, c / divisor->second);
  }
  return remainder;
}

InvariantPolynomial normal_form(const InvariantPolynomial& p, const GroebnerBasis& basis) {
  return normal_form(p, basis.elements);
}

InvariantPolynomial s_polynomial(const InvariantPolynomial& f, const InvariantPolynomial& g) {
  auto [mf, cf] = f.leading_term();
  auto [mg, cg] = g.leading_term();
  const Monomial l = lcm(mf, mg);
  return f.shifted(l / mf, 1 / cf) - g.shifted(l / mg, 1 / cg);
}

std::size_t GroebnerCertificate::failures() const {
  return static_cast<std::size_t>(std::count_if(
      pairs.begin(), pairs.end(), [](const auto& pair) { return !pair.remainder.is_zero(); }));
}

GroebnerCertificate is_groebner(const std::vector<InvariantPolynomial>& basis) {
  GroebnerCertificate cert;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      SPairCertificate pair;
      pair.first = i;
      pair.second = j;
      pair.lcm = lcm(basis[i].leading_term().first, basis[j].leading_term().first);
      pair.remainder = normal_form(s_polynomial(basis[i], basis[j]), basis);
      if (!pair.remainder.is_zero()) cert.is_groebner = false;
      cert.pairs.push_back(std::move(pair));
    }
  return cert;
}

GroebnerCertificate is_groebner(const GroebnerBasis& basis) { return is_groebner(basis.elements); }

Monomial expected_zhat_leading_monomial(long g, long n) {
  if (n < 0 || n > g) throw Error(ErrorCode::InvalidArgument, "need 0 <= n <= g");
  if (2 * n <= g)
    return Monomial{static_cast<std::uint32_t>(g - 2 * n), 0, static_cast<std::uint32_t>(n)};
  return Monomial{0, static_cast<std::uint32_t>(2 * n - g), static_cast<std::uint32_t>(g - n)};
}

namespace {

GroebnerBasis build_basis(long g) {
  GroebnerBasis basis;
  basis.genus = g;
  if (g == 0) {
    basis.elements.emplace_back(Rational(1));
    basis.labels.emplace_back("1");
    return basis;
  }
  if (g == 1) {
    // ζ̂_{1,1/2} degenerates to 0, so I_1 = (α, β, γ) is used in reduced form.
    basis.elements = {InvariantPolynomial::alpha(), InvariantPolynomial::beta(),
                      InvariantPolynomial::gamma()};
    basis.labels = {"a", "b", "g"};
    return basis;
  }
  for (long n = 0; n <= g; ++n) {
    InvariantPolynomial element = zhat_relation(g, n);
    if (element.is_zero() || !(element.leading_term().first == expected_zhat_leading_monomial(g, n)))
      throw Error(ErrorCode::InvalidArgument, "unexpected leading monomial for zhat(" +
                                                  std::to_string(g) + "," + std::to_string(n) + ")");
    basis.elements.push_back(std::move(element));
    basis.labels.push_back("zhat(" + std::to_string(g) + "," + std::to_string(n) + ")");
  }
  if (g % 2 == 1) {
    basis.elements.push_back(zhat_extra(g));
    basis.labels.push_back("zhat(" + std::to_string(g) + "," + std::to_string(g) + "/2)");
  }
  return basis;
}

std::mutex basis_mutex;

}  // namespace

GroebnerBasis invariant_groebner_basis(long g) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be >= 0");
  static std::map<long, GroebnerBasis> cache;
  {
    std::lock_guard lock(basis_mutex);
    if (auto it = cache.find(g); it != cache.end()) return it->second;
  }
  GroebnerBasis basis = build_basis(g);
  std::lock_guard lock(basis_mutex);
  return cache.try_emplace(g, std::move(basis)).first->second;
}

std::vector<Monomial> standard_monomials(long g) {
  if (g < 1) throw Error(ErrorCode::InvalidArgument, "standard monomials need g >= 1");
  const GroebnerBasis basis = invariant_groebner_basis(g);
  std::vector<Monomial> leads;
  for (const auto& e : basis.elements) leads.push_back(e.leading_term().first);
  // α^g, β^g and a pure γ power lie in the leading ideal, which bounds the search.
  std::vector<Monomial> out;
  const auto bound = static_cast<std::uint32_t>(g);
  for (std::uint32_t a = 0; a < bound; ++a)
    for (std::uint32_t b = 0; b < bound; ++b)
      for (std::uint32_t c = 0; c <= bound; ++c) {
        Monomial m{a, b, c};
        if (std::none_of(leads.begin(), leads.end(),
                         [&m](const Monomial& lead) { return lead.divides(m); }))
          out.push_back(m);
      }
  std::sort(out.begin(), out.end(),
            [](const Monomial& x, const Monomial& y) { return compare_monomials(x, y) < 0; });
  return out;
}

SeriesPolynomial quotient_hilbert_series(long g) {
  SeriesPolynomial series;
  for (const auto& m : standard_monomials(g)) series.add_term(m.degree(), 1);
  return series;
}

bool ideal_contains(long g, const InvariantPolynomial& p) {
  return normal_form(p, invariant_groebner_basis(g)).is_zero();
}

bool is_combination(const InvariantPolynomial& target,
                    const std::vector<InvariantPolynomial>& generators,
                    const std::vector<InvariantPolynomial>& cofactors) {
  if (generators.size() != cofactors.size()) return false;
  InvariantPolynomial sum;
  for (std::size_t i = 0; i < generators.size(); ++i) sum += cofactors[i] * generators[i];
  return sum == target;
}

}  // namespace moduli
