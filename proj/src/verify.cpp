#include "moduli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "moduli/cohomology.hpp"
#include "moduli/groebner.hpp"
#include "moduli/zeta_sequences.hpp"

namespace moduli {

namespace {

using Task = std::function<CheckResult()>;

CheckResult result(std::string name, std::string parameters, bool passed, std::string detail) {
  return CheckResult{std::move(name), std::move(parameters), passed, std::move(detail)};
}

std::string param(const char* key, long value) { return std::string(key) + "=" + std::to_string(value); }

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MODULI_RING_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(std::min(n, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Uniform enough for property sampling; the modulo keeps the stream
// identical across standard library implementations.
long pick(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational random_rational(std::mt19937_64& rng) {
  long num = 0;
  while (num == 0) num = pick(rng, -3, 3);
  Rational q(num, pick(rng, 1, 3));
  q.canonicalize();
  return q;
}

InvariantPolynomial random_poly(std::mt19937_64& rng) {
  InvariantPolynomial p;
  const long terms = pick(rng, 1, 3);
  for (long t = 0; t < terms; ++t) {
    const Monomial m{static_cast<std::uint32_t>(pick(rng, 0, 2)),
                     static_cast<std::uint32_t>(pick(rng, 0, 1)),
                     static_cast<std::uint32_t>(pick(rng, 0, 1))};
    p.add_term(m, random_rational(rng));
  }
  return p;
}

ExteriorElement random_exterior(std::mt19937_64& rng, long g, long k) {
  const auto subsets = subsets_of_size(2 * g, k);
  ExteriorElement x(g);
  const long terms = pick(rng, 1, 3);
  for (long t = 0; t < terms; ++t)
    x.add_term(subsets[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(subsets.size()) - 1))],
               random_rational(rng));
  return x;
}

// Nonzero homogeneous-parity class: a single random exterior element of
// fixed degree tensored with a random polynomial.
StructuralClass random_class(std::mt19937_64& rng, long g) {
  for (;;) {
    const long k = pick(rng, 0, 2 * g);
    StructuralClass x = canonical_class(g, {{random_exterior(rng, g, k), random_poly(rng)}});
    if (!x.is_zero()) return x;
  }
}

// ---- families ------------------------------------------------------------

CheckResult check_lambda_table() {
  const std::pair<std::pair<long, long>, long> expected[] = {
      {{1, 0}, 1}, {{0, 1}, 2}, {{2, 0}, 9}, {{1, 1}, 44}, {{0, 2}, 40}, {{3, 0}, 225}};
  LambdaTable table;
  for (const auto& [tu, value] : expected) {
    const Integer got = table(tu.first, tu.second);
    if (got != value)
      return result("lambda-table", "", false,
                    "lambda(" + std::to_string(tu.first) + "," + std::to_string(tu.second) +
                        ") = " + got.get_str());
  }
  return result("lambda-table", "", true, "6 values");
}

CheckResult check_zeta_closed(long n) {
  const bool ok = zeta_recursive(n) == zeta_closed(n);
  return result("zeta-closed-form", param("n", n), ok,
                ok ? "recursion = closed form" : "recursion and closed form differ");
}

CheckResult check_zhat_equivalence(long g) {
  const std::string name = "zhat-equivalence";
  for (long n = 0; n <= g; ++n)
    if (zhat_relation(g, n) != zhat_relation_alt(g, n))
      return result(name, param("g", g), false, "forms differ at n=" + std::to_string(n));
  if (zhat_relation(g, g) != pow(InvariantPolynomial::beta(), static_cast<unsigned>(g)))
    return result(name, param("g", g), false, "zhat(g,g) != b^g");
  for (long n = g + 1; n <= g + 3; ++n)
    if (!zhat_relation_alt(g, n).is_zero())
      return result(name, param("g", g), false, "alternate form nonzero at n=" + std::to_string(n));
  if (zhat_relation(g, 0) * Rational(factorial(g)) != zeta_recursive(g))
    return result(name, param("g", g), false, "zhat(g,0) * g! != zeta_g");
  return result(name, param("g", g), true, std::to_string(g + 1) + " relations, both forms");
}

CheckResult recurrence_family(long g_max) {
  const RecurrenceReport report = moduli::check_zhat_recurrence(g_max);
  std::string detail = std::to_string(report.instances_checked) + " instances";
  if (!report.failures.empty()) {
    const auto& f = report.failures.front();
    detail += "; first failure g=" + std::to_string(f.g) + " n=" + std::to_string(f.n) +
              (f.alternate_form ? " (alternate form)" : "");
  }
  return result("zhat-recurrence", param("max", g_max), report.failures.empty(), detail);
}

CheckResult check_binomials(long bound) {
  const BinomialIdentityReport report = verify_binomial_identities(bound, bound);
  std::string detail = std::to_string(report.instances_checked) + " instances";
  if (!report.failures.empty()) {
    const auto& f = report.failures.front();
    detail += "; identity " + std::to_string(f.identity) + " fails at g=" + std::to_string(f.g) +
              " n=" + std::to_string(f.n) + " i=" + std::to_string(f.i);
  }
  return result("binomial-identities", param("max", bound), report.failures.empty(), detail);
}

CheckResult check_leading_monomials(long g) {
  const std::string name = "leading-monomials";
  for (long n = 0; n <= g; ++n) {
    const Monomial expected = 2 * n <= g
        ? Monomial{static_cast<std::uint32_t>(g - 2 * n), 0, static_cast<std::uint32_t>(n)}
        : Monomial{0, static_cast<std::uint32_t>(2 * n - g), static_cast<std::uint32_t>(g - n)};
    if (leading_monomial(zhat_relation(g, n)).first != expected)
      return result(name, param("g", g), false, "n=" + std::to_string(n) + " has LM " +
                                                    format_monomial(leading_monomial(zhat_relation(g, n)).first));
  }
  if (g % 2 == 1) {
    const Monomial expected{0, 0, static_cast<std::uint32_t>((g + 1) / 2)};
    if (leading_monomial(zhat_extra(g)).first != expected)
      return result(name, param("g", g), false, "extra element LM mismatch");
  }
  return result(name, param("g", g), true, g % 2 ? "table + extra element" : "table");
}

CheckResult check_groebner(long g) {
  const GroebnerCertificate cert = is_groebner(invariant_groebner_basis(g));
  return result("groebner-certificate", param("g", g), cert.is_groebner,
                std::to_string(cert.pairs.size()) + " S-pairs, " + std::to_string(cert.failures()) +
                    " nonzero remainders");
}

CheckResult check_standard_monomials(long g) {
  const std::string name = "standard-monomials";
  if (standard_monomials(g) != expected_standard_monomials(g))
    return result(name, param("g", g), false, "set differs from i+2p<g, j+2p<g");
  const SeriesPolynomial h = quotient_hilbert_series(g);
  if (h != poincare_invariant(g, InvariantForm::Product) || h != poincare_invariant(g, InvariantForm::Sum))
    return result(name, param("g", g), false, "Hilbert series differs from P_I");
  return result(name, param("g", g), true,
                std::to_string(standard_monomials(g).size()) + " monomials");
}

CheckResult check_series_forms(long g) {
  const std::string name = "series-forms";
  const SeriesPolynomial harder = poincare_full(g, FullForm::Harder);
  if (harder != poincare_full(g, FullForm::Monomial) || harder != poincare_full(g, FullForm::Binomial))
    return result(name, param("g", g), false, "full forms disagree");
  const SeriesPolynomial inv = poincare_invariant(g, InvariantForm::Product);
  if (inv != poincare_invariant(g, InvariantForm::Sum))
    return result(name, param("g", g), false, "invariant forms disagree");
  for (const auto* p : {&harder, &inv})
    if (!p->is_palindromic() || p->degree() != 6 * g - 6 || p->low_degree() != 0)
      return result(name, param("g", g), false, "not palindromic of degree 6g-6");
  const SeriesPolynomial difference = harder - inv;
  if (g <= 12)
    for (const auto& [e, c] : difference.coefficients())
      if (c < 0) return result(name, param("g", g), false, "P - P_I negative at t^" + std::to_string(e));
  return result(name, param("g", g), true, "P(1) = " + to_string(harder.evaluate(1)));
}

CheckResult series_identity_family(long g_max) {
  const SeriesIdentityReport report = moduli::check_series_identities(g_max);
  std::string detail = std::to_string(report.instances_checked) + " instances";
  if (!report.failures.empty())
    detail += "; " + report.failures.front().identity + " fails at g=" +
              std::to_string(report.failures.front().g);
  return result("series-identities", param("max", g_max), report.failures.empty(), detail);
}

CheckResult check_membership(long g, bool with_gamma_power) {
  const std::string name = "ideal-membership";
  const GroebnerBasis basis = invariant_groebner_basis(g);
  for (long n = g; n <= g + 4; ++n)
    if (!normal_form(zeta_recursive(n), basis).is_zero())
      return result(name, param("g", g), false, "zeta_" + std::to_string(n) + " not in I_g");
  for (const auto& element : invariant_groebner_basis(g + 1).elements)
    if (!normal_form(element, basis).is_zero())
      return result(name, param("g", g), false, "I_{g+1} not contained in I_g");
  std::string detail = "zeta_g..zeta_{g+4}, I_{g+1}";
  if (with_gamma_power) {
    if (!normal_form(pow(InvariantPolynomial::gamma(), static_cast<unsigned>(g + 1)), basis).is_zero())
      return result(name, param("g", g), false, "g^(g+1) not in I_g");
    detail += ", g^(g+1)";
  }
  return result(name, param("g", g), true, detail);
}

CheckResult check_ideal_one() {
  const std::string name = "ideal-one";
  const InvariantPolynomial a = InvariantPolynomial::alpha();
  const std::vector<InvariantPolynomial> zetas{zeta_recursive(1), zeta_recursive(2), zeta_recursive(3)};
  const GroebnerBasis basis = invariant_groebner_basis(1);
  for (const auto& z : zetas)
    if (!normal_form(z, basis).is_zero()) return result(name, "", false, "zeta not in (a,b,g)");
  const InvariantPolynomial zero;
  const InvariantPolynomial one(Rational(1));
  const bool ok =
      is_combination(a, zetas, {one, zero, zero}) &&
      is_combination(InvariantPolynomial::beta(), zetas, {a * Rational(-1), one, zero}) &&
      is_combination(InvariantPolynomial::gamma(), zetas,
                     {pow(a, 2), a * Rational(-5, 4), InvariantPolynomial(Rational(1, 4))});
  return result(name, "", ok, ok ? "(zeta_1, zeta_2, zeta_3) = (a, b, g)" : "cofactor certificate failed");
}

CheckResult check_relation_matrix(long g) {
  const std::string name = "relation-matrix";
  if (relation_matrix(g) != printed_relation_matrix(g))
    return result(name, param("g", g), false, "entries differ from printed matrix");
  const Rational det = determinant(relation_matrix(g));
  const Integer formula = relation_matrix_determinant_formula(g);
  if (det != Rational(formula))
    return result(name, param("g", g), false, "det " + to_string(det) + " vs " + formula.get_str());
  return result(name, param("g", g), true, "det = " + formula.get_str());
}

CheckResult check_derangement(long d) {
  LambdaTable table;
  Integer sum = 0;
  for (long u = 0; 3 * u <= d; ++u)
    if ((d - 3 * u) % 2 == 0) sum += table((d - 3 * u) / 2, u);
  // Independent of derangement(): D_d = d * D_{d-1} + (-1)^d.
  Integer expected = 1;
  for (long k = 1; k <= d; ++k) expected = Integer(k) * expected + (k % 2 ? -1 : 1);
  bool ok = sum == expected && derangement(d) == expected;
  // The same diagonal sum must come out of ζ_g for two different g.
  for (long g : {d, d + 1}) {
    const CoefficientSum s = prop41_coefficient_sum(g, d);
    ok = ok && s.lhs == Rational(binomial(g, d) * expected) && s.lhs == s.rhs;
  }
  return result("coefficient-sums", param("d", d), ok, "sum = " + sum.get_str());
}

CheckResult check_relation_count(long g) {
  // dim (I_{g-2}) in degree 2g+2 is all monomials minus the quotient dimension.
  long monomials = 0;
  for (long p = 0; 3 * p <= g + 1; ++p) monomials += (g + 1 - 3 * p) / 2 + 1;
  const Integer dim = Integer(monomials) - poincare_invariant(g - 2).coefficient(2 * g + 2);
  bool independent = determinant(relation_matrix(g)) != 0;
  // The six listed relations lie in I_{g-2} and are independent.
  for (const auto& r : degree_2g_plus_2_relations(g))
    independent = independent && normal_form(r, invariant_groebner_basis(g - 2)).is_zero();
  const bool ok = dim == 6 && independent;
  return result("relation-count", param("g", g), ok, "dim = " + dim.get_str());
}

CheckResult check_prop41_sample(long g, long d) {
  const CoefficientSum s = prop41_coefficient_sum(g, d);
  return result("coefficient-sums-binomial", "g=" + std::to_string(g) + ",d=" + std::to_string(d),
                s.lhs == s.rhs, "lhs = " + to_string(s.lhs) + ", rhs = " + to_string(s.rhs));
}

CheckResult check_primitive_dimensions(long g) {
  const std::string name = "primitive-dimensions";
  for (long k = 0; k <= g; ++k) {
    auto basis = primitive_basis(g, k);
    if (Integer(static_cast<long>(basis->vectors.size())) != primitive_dimension_formula(g, k))
      return result(name, param("g", g), false, "dim mismatch at k=" + std::to_string(k));
    const ExteriorElement power = gamma_power(g, g - k + 1);
    for (const auto& v : basis->vectors)
      if (!wedge(power, v).is_zero())
        return result(name, param("g", g), false, "basis vector not killed at k=" + std::to_string(k));
  }
  for (long k = 0; k <= 2 * g; ++k)
    if (Integer(lefschetz_dimension_sum(g, k)) != binomial(2 * g, k))
      return result(name, param("g", g), false, "bookkeeping fails at k=" + std::to_string(k));
  return result(name, param("g", g), true, "k <= g kernels, k <= 2g bookkeeping");
}

CheckResult check_basis_count(long g) {
  for (long n = 0; n <= 6 * g - 6; ++n)
    if (Integer(static_cast<long>(basis_37(g, n).size())) != betti(g, n))
      return result("basis-count", param("g", g), false, "degree " + std::to_string(n));
  if (!basis_37(g, 6 * g - 5).empty())
    return result("basis-count", param("g", g), false, "nonzero above top degree");
  return result("basis-count", param("g", g), true, "P(1) = " + to_string(poincare_full(g).evaluate(1)));
}

CheckResult check_gamma_transfer(long g, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(g)));
  const ExteriorElement gamma = gamma_class(g);
  for (int s = 0; s < samples; ++s) {
    const ExteriorElement q = random_exterior(rng, g, pick(rng, 0, 2 * g - 2));
    const InvariantPolynomial p = random_poly(rng);
    const StructuralClass left = canonical_class(g, {{wedge(gamma, q), p}});
    const StructuralClass right = canonical_class(g, {{q, InvariantPolynomial::gamma() * p}});
    if (left != right)
      return result("class-gamma-transfer", param("g", g), false,
                    "sample " + std::to_string(s) + ": q = " + format_exterior(q) + ", p = " + format_poly(p));
  }
  return result("class-gamma-transfer", param("g", g), true, std::to_string(samples) + " samples");
}

CheckResult check_lefschetz_reassembly(long g, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed ^ (0x94d049bb133111ebULL * static_cast<std::uint64_t>(g)));
  for (int s = 0; s < samples; ++s) {
    const ExteriorElement x = random_exterior(rng, g, pick(rng, 0, 2 * g));
    ExteriorElement back(g);
    for (const auto& part : lefschetz_decompose(x)) {
      if (!wedge(gamma_power(g, g - part.primitive.degree() + 1), part.primitive).is_zero())
        return result("lefschetz-reassembly", param("g", g), false, "non-primitive part");
      back += wedge(gamma_power(g, part.m), part.primitive);
    }
    if (back != x)
      return result("lefschetz-reassembly", param("g", g), false, "x = " + format_exterior(x));
  }
  return result("lefschetz-reassembly", param("g", g), true, std::to_string(samples) + " samples");
}

CheckResult check_normal_form_linearity(long g, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed ^ (0xbf58476d1ce4e5b9ULL * static_cast<std::uint64_t>(g)));
  const GroebnerBasis basis = invariant_groebner_basis(g);
  auto big_poly = [&] {
    InvariantPolynomial p;
    for (long t = pick(rng, 1, 4); t > 0; --t)
      p.add_term(Monomial{static_cast<std::uint32_t>(pick(rng, 0, g + 1)), static_cast<std::uint32_t>(pick(rng, 0, g)),
                          static_cast<std::uint32_t>(pick(rng, 0, g / 2 + 1))},
                 random_rational(rng));
    return p;
  };
  for (int s = 0; s < samples; ++s) {
    const InvariantPolynomial p = big_poly(), q = big_poly();
    const Rational c = random_rational(rng);
    const InvariantPolynomial np = normal_form(p, basis);
    if (normal_form(np, basis) != np)
      return result("normal-form-linearity", param("g", g), false, "not idempotent on " + format_poly(p));
    if (normal_form(p + q * c, basis) != np + normal_form(q, basis) * c)
      return result("normal-form-linearity", param("g", g), false, "not linear on " + format_poly(p));
  }
  return result("normal-form-linearity", param("g", g), true, std::to_string(samples) + " samples");
}

CheckResult check_class_ring(long g, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed ^ (0xc2b2ae3d27d4eb4fULL * static_cast<std::uint64_t>(g)));
  for (int s = 0; s < samples; ++s) {
    const StructuralClass x = random_class(rng, g);
    const StructuralClass y = random_class(rng, g);
    const StructuralClass z = random_class(rng, g);
    const StructuralClass xy = multiply_classes(x, y);
    const Rational sign = exterior_parity(x) * exterior_parity(y) == 1 ? -1 : 1;
    if (xy != scale_class(multiply_classes(y, x), sign))
      return result("class-ring-axioms", param("g", g), false,
                    "graded commutativity fails at sample " + std::to_string(s));
    if (multiply_classes(xy, z) != multiply_classes(x, multiply_classes(y, z)))
      return result("class-ring-axioms", param("g", g), false,
                    "associativity fails at sample " + std::to_string(s));
  }
  return result("class-ring-axioms", param("g", g), true, std::to_string(samples) + " triples");
}

}  // namespace

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

std::size_t VerificationReport::failed() const { return checks.size() - passed(); }

bool natural_less(const std::string& x, const std::string& y) {
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (std::isdigit(static_cast<unsigned char>(x[i])) && std::isdigit(static_cast<unsigned char>(y[j]))) {
      std::size_t ie = i, je = j;
      while (ie < x.size() && std::isdigit(static_cast<unsigned char>(x[ie]))) ++ie;
      while (je < y.size() && std::isdigit(static_cast<unsigned char>(y[je]))) ++je;
      const std::string a = x.substr(i, ie - i), b = y.substr(j, je - j);
      const Integer ai(a), bi(b);
      if (ai != bi) return ai < bi;
      i = ie;
      j = je;
    } else {
      if (x[i] != y[j]) return x[i] < y[j];
      ++i;
      ++j;
    }
  }
  return x.size() - i < y.size() - j;
}

RationalMatrix printed_relation_matrix(long g) {
  auto C = [](long n, long k) { return Rational(binomial(n, k)); };
  const long h = g - 1, f = g - 2;
  return RationalMatrix::from_rows({
      {1, 1, 1, 0, 0, 0},
      {2 * C(g, 3), 2 * C(h, 3), 2 * C(f, 3), 1, 0, 0},
      {C(g, 2), C(h, 2), C(f, 2), 0, 1, 1},
      {9 * C(g, 4), 9 * C(h, 4), 9 * C(f, 4), 0, C(h, 2), C(f, 2)},
      {44 * C(g, 5), 44 * C(h, 5), 44 * C(f, 5), C(f, 2), 2 * C(h, 3), 2 * C(f, 3)},
      {265 * C(g, 6), 265 * C(h, 6), 265 * C(f, 6), 2 * C(f, 3), 9 * C(h, 4), 9 * C(f, 4)},
  });
}

std::vector<Monomial> expected_standard_monomials(long g) {
  std::vector<Monomial> out;
  for (long p = 0; 2 * p < g; ++p)
    for (long i = 0; i + 2 * p < g; ++i)
      for (long j = 0; j + 2 * p < g; ++j)
        out.push_back(Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                               static_cast<std::uint32_t>(p)});
  std::sort(out.begin(), out.end(),
            [](const Monomial& x, const Monomial& y) { return compare_monomials(x, y) < 0; });
  return out;
}

VerificationReport verify_all(long g_max, std::uint64_t seed, unsigned threads) {
  if (g_max < 2) throw Error(ErrorCode::InvalidArgument, "verify-all needs g_max >= 2");
  auto cap = [g_max](long bound) { return std::min(bound, g_max); };

  std::vector<Task> tasks;
  tasks.emplace_back([] { return check_lambda_table(); });
  for (long n = 0; n <= cap(20); ++n) tasks.emplace_back([n] { return check_zeta_closed(n); });
  for (long g = 0; g <= cap(14); ++g) tasks.emplace_back([g] { return check_zhat_equivalence(g); });
  tasks.emplace_back([m = cap(14)] { return recurrence_family(m); });
  tasks.emplace_back([m = cap(12)] { return check_binomials(m); });
  for (long g = 2; g <= cap(14); ++g) tasks.emplace_back([g] { return check_leading_monomials(g); });
  for (long g = 1; g <= cap(8); ++g) {
    tasks.emplace_back([g] { return check_groebner(g); });
    tasks.emplace_back([g] { return check_standard_monomials(g); });
    tasks.emplace_back([g, gp = g <= cap(6)] { return check_membership(g, gp); });
  }
  tasks.emplace_back([] { return check_ideal_one(); });
  for (long g = 2; g <= cap(16); ++g) tasks.emplace_back([g] { return check_series_forms(g); });
  tasks.emplace_back([m = cap(12)] { return series_identity_family(m); });
  for (long g = 5; g <= cap(40); ++g) {
    tasks.emplace_back([g] { return check_relation_matrix(g); });
    tasks.emplace_back([g] { return check_relation_count(g); });
  }
  for (long d = 0; d <= cap(30); ++d) tasks.emplace_back([d] { return check_derangement(d); });
  {
    std::mt19937_64 rng(seed);
    std::set<std::pair<long, long>> pairs;
    const long top = cap(20);
    for (int s = 0; s < 12; ++s) {
      const long g = pick(rng, 0, top);
      pairs.emplace(g, pick(rng, 0, g));
    }
    for (const auto& [g, d] : pairs) tasks.emplace_back([g, d] { return check_prop41_sample(g, d); });
  }
  for (long g = 1; g <= cap(4); ++g) {
    tasks.emplace_back([g] { return check_primitive_dimensions(g); });
    tasks.emplace_back([g, seed] { return check_lefschetz_reassembly(g, seed, 20); });
  }
  for (long g = 1; g <= cap(8); ++g)
    tasks.emplace_back([g, seed] { return check_normal_form_linearity(g, seed, 20); });
  for (long g = 2; g <= cap(6); ++g) tasks.emplace_back([g] { return check_basis_count(g); });
  for (long g = 2; g <= cap(3); ++g) {
    tasks.emplace_back([g, seed] { return check_gamma_transfer(g, seed, 100); });
    tasks.emplace_back([g, seed] { return check_class_ring(g, seed, 50); });
  }

  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = result("exception", std::to_string(i), false, e.what());
      }
    }
  };
  const unsigned n_threads = std::min<unsigned>(thread_count(threads), static_cast<unsigned>(tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::stable_sort(results.begin(), results.end(), [](const CheckResult& x, const CheckResult& y) {
    if (x.name != y.name) return x.name < y.name;
    return natural_less(x.parameters, y.parameters);
  });
  return VerificationReport{g_max, seed, std::move(results)};
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.parameters.empty()) out << " [" << c.parameters << "]";
    out << ": " << c.detail << "\n";
  }
  out << "summary: " << report.passed() << " passed, " << report.failed() << " failed (g_max="
      << report.g_max << ", seed=" << report.seed << ")\n";
  return out.str();
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"name", c.name},
                          {"parameters", c.parameters},
                          {"status", c.passed ? "pass" : "fail"},
                          {"detail", c.detail}});
  return Json{{"g_max", report.g_max},
              {"seed", report.seed},
              {"checks", std::move(checks)},
              {"summary", Json{{"passed", report.passed()}, {"failed", report.failed()}}}};
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport report;
  report.g_max = j.at("g_max").get<long>();
  report.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& c : j.at("checks")) {
    const std::string status = c.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw Error(ErrorCode::ParseError, "bad status " + status);
    report.checks.push_back(result(c.at("name").get<std::string>(), c.at("parameters").get<std::string>(),
                                   status == "pass", c.at("detail").get<std::string>()));
  }
  return report;
}

}  // namespace moduli
