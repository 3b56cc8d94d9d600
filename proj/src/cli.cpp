#include "moduli/cli.hpp"

#include <CLI11.hpp>

#include <optional>

#include "moduli/cohomology.hpp"
#include "moduli/groebner.hpp"
#include "moduli/json_io.hpp"
#include "moduli/verify.hpp"
#include "moduli/zeta_sequences.hpp"

namespace moduli {

namespace {

// Bounds that keep a single invocation interactive.
constexpr long kMaxZetaIndex = 200;
constexpr long kMaxZhatGenus = 60;
constexpr long kMaxLambdaDegree = 120;
constexpr long kMaxGroebnerGenus = 12;
constexpr long kMaxSeriesGenus = 1000;
constexpr long kMaxMatrixGenus = 1000;
constexpr long kMaxProp41Genus = 200;
constexpr long kMaxVerifyGenus = 40;

void require_range(const char* what, long value, long lo, long hi) {
  if (value < lo || value > hi)
    throw Error(value > hi ? ErrorCode::Capacity : ErrorCode::InvalidArgument,
                std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "], got " + std::to_string(value));
}

bool usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::Capacity:
    case ErrorCode::InvalidArgument:
    case ErrorCode::GenusTooSmall:
    case ErrorCode::EvenGenus:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::GenusMismatch:
    case ErrorCode::ZeroPolynomial:
      return true;
    default:
      return false;
  }
}

struct Context {
  bool json = false;
  std::ostream& out;
};

void emit(const Context& ctx, const Json& j, const std::string& text) {
  if (ctx.json)
    ctx.out << j.dump(2) << "\n";
  else
    ctx.out << text;
}

// ---- subcommands -----------------------------------------------------------

struct ZetaArgs {
  long n = 0;
  bool closed = false;
};

int run_zeta(const Context& ctx, const ZetaArgs& a) {
  require_range("--n", a.n, 0, kMaxZetaIndex);
  const InvariantPolynomial p = a.closed ? zeta_closed(a.n) : zeta_recursive(a.n);
  emit(ctx,
       Json{{"command", "zeta"}, {"n", a.n}, {"form", a.closed ? "closed" : "recursive"},
            {"polynomial", poly_to_json(p)}},
       format_poly(p) + "\n");
  return 0;
}

struct ZhatArgs {
  long g = 0;
  std::optional<long> n;
  bool alt = false;
  bool extra = false;
};

int run_zhat(const Context& ctx, const ZhatArgs& a) {
  require_range("--g", a.g, 0, kMaxZhatGenus);
  InvariantPolynomial p;
  Json j{{"command", "zhat"}, {"g", a.g}};
  if (a.extra) {
    p = zhat_extra(a.g);
    j["form"] = "extra";
  } else {
    if (!a.n) throw Error(ErrorCode::InvalidArgument, "zhat needs --n or --extra");
    require_range("--n", *a.n, 0, kMaxZhatGenus + 3);
    p = a.alt ? zhat_relation_alt(a.g, *a.n) : zhat_relation(a.g, *a.n);
    j["n"] = *a.n;
    j["form"] = a.alt ? "alternating" : "sum";
  }
  j["polynomial"] = poly_to_json(p);
  emit(ctx, j, format_poly(p) + "\n");
  return 0;
}

struct LambdaArgs {
  std::optional<long> t, u, max_d;
};

int run_lambda(const Context& ctx, const LambdaArgs& a) {
  LambdaTable table;
  Json entries = Json::array();
  std::string text;
  auto add = [&](long t, long u) {
    const Integer v = table(t, u);
    entries.push_back(Json{{"t", t}, {"u", u}, {"value", v.get_str()}});
    return v;
  };
  if (a.max_d) {
    require_range("--max-d", *a.max_d, 0, kMaxLambdaDegree);
    for (long d = 0; d <= *a.max_d; ++d)
      for (long u = 0; 3 * u <= d; ++u)
        if ((d - 3 * u) % 2 == 0) {
          const long t = (d - 3 * u) / 2;
          text += std::to_string(d) + " " + std::to_string(t) + " " + std::to_string(u) + " " +
                  add(t, u).get_str() + "\n";
        }
  } else {
    if (!a.t || !a.u) throw Error(ErrorCode::InvalidArgument, "lambda needs --t and --u, or --max-d");
    require_range("--t", *a.t, 0, kMaxLambdaDegree);
    require_range("--u", *a.u, 0, kMaxLambdaDegree);
    text = add(*a.t, *a.u).get_str() + "\n";
  }
  emit(ctx, Json{{"command", "lambda"}, {"entries", std::move(entries)}}, text);
  return 0;
}

struct GroebnerArgs {
  long g = 0;
  bool check = false;
  bool standard = false;
  bool hilbert = false;
  std::optional<std::string> reduce;
};

int run_groebner(const Context& ctx, const GroebnerArgs& a) {
  require_range("--g", a.g, 0, kMaxGroebnerGenus);
  const GroebnerBasis basis = invariant_groebner_basis(a.g);
  Json j{{"command", "groebner"}, {"g", a.g}};
  std::string text;

  if (a.check) {
    const GroebnerCertificate cert = is_groebner(basis);
    Json pairs = Json::array();
    for (const auto& p : cert.pairs) {
      pairs.push_back(Json{{"first", basis.labels[p.first]},
                           {"second", basis.labels[p.second]},
                           {"lcm", monomial_to_json(p.lcm)},
                           {"remainder", poly_to_json(p.remainder)}});
      text += "S(" + basis.labels[p.first] + ", " + basis.labels[p.second] + ") lcm " +
              format_monomial(p.lcm) + " -> " + format_poly(p.remainder) + "\n";
    }
    j["status"] = cert.is_groebner ? "pass" : "fail";
    j["pairs"] = std::move(pairs);
    text += std::string(cert.is_groebner ? "PASS" : "FAIL") + ": " + std::to_string(cert.pairs.size()) +
            " S-pairs, " + std::to_string(cert.failures()) + " nonzero remainders\n";
    emit(ctx, j, text);
    return cert.is_groebner ? 0 : 1;
  }
  if (a.standard) {
    if (a.g < 1) throw Error(ErrorCode::InvalidArgument, "standard monomials need g >= 1");
    Json monomials = Json::array();
    for (const auto& m : standard_monomials(a.g)) {
      monomials.push_back(monomial_to_json(m));
      text += std::to_string(m.degree()) + " " + format_monomial(m) + "\n";
    }
    j["standard_monomials"] = std::move(monomials);
    emit(ctx, j, text);
    return 0;
  }
  if (a.hilbert) {
    if (a.g < 1) throw Error(ErrorCode::InvalidArgument, "the Hilbert series needs g >= 1");
    const SeriesPolynomial h = quotient_hilbert_series(a.g);
    j["series"] = series_to_json(h);
    emit(ctx, j, format_series(h) + "\n");
    return 0;
  }
  if (a.reduce) {
    const InvariantPolynomial p = parse_poly(*a.reduce);
    const InvariantPolynomial r = normal_form(p, basis);
    j["input"] = poly_to_json(p);
    j["normal_form"] = poly_to_json(r);
    emit(ctx, j, format_poly(r) + "\n");
    return 0;
  }
  Json elements = Json::array();
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    const Monomial lm = leading_monomial(basis.elements[i]).first;
    elements.push_back(Json{{"label", basis.labels[i]},
                            {"leading_monomial", monomial_to_json(lm)},
                            {"polynomial", poly_to_json(basis.elements[i])}});
    text += basis.labels[i] + " [LM " + format_monomial(lm) + "]: " + format_poly(basis.elements[i]) + "\n";
  }
  j["basis"] = std::move(elements);
  emit(ctx, j, text);
  return 0;
}

struct PoincareArgs {
  long g = 0;
  bool invariant = false;
  bool all_forms = false;
  std::optional<std::string> at;
};

int run_poincare(const Context& ctx, const PoincareArgs& a) {
  require_range("--g", a.g, a.invariant ? 0 : 2, kMaxSeriesGenus);
  Json j{{"command", "poincare"}, {"g", a.g}, {"kind", a.invariant ? "invariant" : "full"}};
  std::string text;
  std::vector<std::pair<std::string, SeriesPolynomial>> forms;
  if (a.invariant) {
    forms.emplace_back("product", poincare_invariant(a.g, InvariantForm::Product));
    if (a.all_forms) forms.emplace_back("sum", poincare_invariant(a.g, InvariantForm::Sum));
  } else {
    forms.emplace_back("harder", poincare_full(a.g, FullForm::Harder));
    if (a.all_forms) {
      forms.emplace_back("monomial", poincare_full(a.g, FullForm::Monomial));
      forms.emplace_back("binomial", poincare_full(a.g, FullForm::Binomial));
    }
  }
  const SeriesPolynomial& series = forms.front().second;
  bool agree = true;
  for (const auto& [name, s] : forms) agree = agree && s == series;
  j["series"] = series_to_json(series);
  if (a.all_forms) {
    Json by_form = Json::object();
    for (const auto& [name, s] : forms) {
      by_form[name] = series_to_json(s);
      text += name + ": " + format_series(s) + "\n";
    }
    j["forms"] = std::move(by_form);
    j["agree"] = agree;
    text += std::string("agree: ") + (agree ? "yes" : "no") + "\n";
  } else {
    text += format_series(series) + "\n";
  }
  if (a.at) {
    const Rational t = parse_rational(*a.at);
    const Rational v = series.evaluate(t);
    j["at"] = rational_to_json(t);
    j["value"] = rational_to_json(v);
    text += "value at t=" + to_string(t) + ": " + to_string(v) + "\n";
  }
  emit(ctx, j, text);
  return agree ? 0 : 1;
}

struct ExteriorArgs {
  long g = 0;
  bool primitive_dims = false;
  std::optional<std::string> decompose;
  std::optional<long> basis_count;
  bool check = false;
};

int run_exterior(const Context& ctx, const ExteriorArgs& a) {
  require_range("--g", a.g, 1, kMaxExteriorGenus);
  Json j{{"command", "exterior"}, {"g", a.g}};
  std::string text;

  if (a.decompose) {
    const ExteriorElement x = parse_exterior(a.g, *a.decompose);
    Json parts = Json::array();
    for (long k = 0; k <= 2 * a.g; ++k)
      for (const auto& part : lefschetz_decompose(x.component(k))) {
        parts.push_back(Json{{"m", part.m}, {"primitive", exterior_to_json(part.primitive)}});
        text += "g^" + std::to_string(part.m) + " * (" + format_exterior(part.primitive) + ")\n";
      }
    if (parts.empty()) text = "0\n";
    j["input"] = exterior_to_json(x);
    j["parts"] = std::move(parts);
    emit(ctx, j, text);
    return 0;
  }
  if (a.basis_count) {
    const long n = *a.basis_count;
    require_range("--basis-count", n, 0, 6 * a.g);
    const std::size_t count = basis_37(a.g, n).size();
    const Integer b = a.g >= 2 ? betti(a.g, n) : Integer(n == 0 ? 1 : 0);
    j["n"] = n;
    j["count"] = count;
    j["betti"] = b.get_str();
    emit(ctx, j, std::to_string(count) + " (betti " + b.get_str() + ")\n");
    return Integer(static_cast<long>(count)) == b ? 0 : 1;
  }

  bool ok = true;
  Json dims = Json::array();
  for (long k = 0; k <= a.g; ++k) {
    const std::size_t computed = primitive_basis(a.g, k)->vectors.size();
    const Integer formula = primitive_dimension_formula(a.g, k);
    ok = ok && Integer(static_cast<long>(computed)) == formula;
    dims.push_back(Json{{"k", k}, {"computed", computed}, {"formula", formula.get_str()}});
    text += std::to_string(k) + " " + std::to_string(computed) + " " + formula.get_str() + "\n";
  }
  j["primitive_dimensions"] = std::move(dims);
  if (a.check) {
    Json bookkeeping = Json::array();
    for (long k = 0; k <= 2 * a.g; ++k) {
      const long sum = lefschetz_dimension_sum(a.g, k);
      const Integer expected = binomial(2 * a.g, k);
      ok = ok && Integer(sum) == expected;
      bookkeeping.push_back(Json{{"k", k}, {"sum", sum}, {"binomial", expected.get_str()}});
    }
    // Reassemble the decomposition of every ψ-monomial of degree <= 3.
    for (long k = 0; k <= std::min(2 * a.g, 3L); ++k)
      for (Subset s : subsets_of_size(2 * a.g, k)) {
        const ExteriorElement x(a.g, s);
        ExteriorElement back(a.g);
        for (const auto& part : lefschetz_decompose(x)) back += wedge(gamma_power(a.g, part.m), part.primitive);
        ok = ok && back == x;
      }
    j["bookkeeping"] = std::move(bookkeeping);
    j["status"] = ok ? "pass" : "fail";
    text += std::string(ok ? "PASS" : "FAIL") + ": primitive dimensions, bookkeeping, reassembly\n";
  }
  emit(ctx, j, text);
  return ok ? 0 : 1;
}

int run_matrix(const Context& ctx, long g) {
  require_range("--g", g, 5, kMaxMatrixGenus);
  const RationalMatrix m = relation_matrix(g);
  const Rational det = determinant(m);
  const Integer formula = relation_matrix_determinant_formula(g);
  std::string text;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) text += (c ? " " : "") + to_string(m(r, c));
    text += "\n";
  }
  text += "det = " + to_string(det) + "\nformula = " + formula.get_str() + "\n";
  emit(ctx,
       Json{{"command", "matrix"}, {"g", g}, {"matrix", matrix_to_json(m)},
            {"determinant", rational_to_json(det)}, {"formula", formula.get_str()}},
       text);
  return det == Rational(formula) ? 0 : 1;
}

int run_prop41(const Context& ctx, long g, std::optional<long> d) {
  require_range("--g", g, 0, kMaxProp41Genus);
  long lo = 0, hi = g;
  if (d) {
    require_range("--d", *d, 0, g);
    lo = hi = *d;
  }
  bool ok = true;
  Json entries = Json::array();
  std::string text;
  for (long k = lo; k <= hi; ++k) {
    const CoefficientSum s = prop41_coefficient_sum(g, k);
    ok = ok && s.lhs == s.rhs;
    entries.push_back(Json{{"d", k}, {"lhs", rational_to_json(s.lhs)}, {"rhs", rational_to_json(s.rhs)}});
    text += std::to_string(k) + " " + to_string(s.lhs) + " " + to_string(s.rhs) +
            (s.lhs == s.rhs ? " ok\n" : " MISMATCH\n");
  }
  emit(ctx, Json{{"command", "prop41"}, {"g", g}, {"entries", std::move(entries)}}, text);
  return ok ? 0 : 1;
}

int run_verify(const Context& ctx, long g_max, std::uint64_t seed) {
  require_range("--g-max", g_max, 2, kMaxVerifyGenus);
  const VerificationReport report = verify_all(g_max, seed);
  emit(ctx, report_to_json(report), format_report(report));
  return report.ok() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the cohomology ring of the moduli space N_g", "moduli-ring"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  ZetaArgs zeta;
  auto* zeta_cmd = app.add_subcommand("zeta", "Relation polynomial zeta_n");
  zeta_cmd->add_option("--n", zeta.n)->required();
  zeta_cmd->add_flag("--closed", zeta.closed, "Use the (t,u) closed form");

  ZhatArgs zhat;
  auto* zhat_cmd = app.add_subcommand("zhat", "Normalized relation zhat_{g,n}");
  zhat_cmd->add_option("--g", zhat.g)->required();
  auto* zhat_n = zhat_cmd->add_option("--n", zhat.n);
  zhat_cmd->add_flag("--alt", zhat.alt, "Use the alternating-sum construction");
  zhat_cmd->add_flag("--extra", zhat.extra, "Odd-genus extra Groebner element")->excludes(zhat_n);

  LambdaArgs lambda;
  auto* lambda_cmd = app.add_subcommand("lambda", "Closed-form coefficients lambda_{t,u}");
  auto* opt_t = lambda_cmd->add_option("--t", lambda.t);
  auto* opt_u = lambda_cmd->add_option("--u", lambda.u);
  lambda_cmd->add_option("--max-d", lambda.max_d, "Print the table for 2t+3u <= D")
      ->excludes(opt_t)
      ->excludes(opt_u);

  GroebnerArgs groebner;
  auto* groebner_cmd = app.add_subcommand("groebner", "Groebner basis of the invariant ideal I_g");
  groebner_cmd->add_option("--g", groebner.g)->required();
  auto* gb_check = groebner_cmd->add_flag("--check", groebner.check, "Certify all S-pairs");
  auto* gb_std = groebner_cmd->add_flag("--standard-monomials", groebner.standard);
  auto* gb_hilb = groebner_cmd->add_flag("--hilbert", groebner.hilbert);
  auto* gb_reduce = groebner_cmd->add_option("--reduce", groebner.reduce, "Normal form of a polynomial");
  gb_check->excludes(gb_std)->excludes(gb_hilb)->excludes(gb_reduce);
  gb_std->excludes(gb_hilb)->excludes(gb_reduce);
  gb_hilb->excludes(gb_reduce);

  PoincareArgs poincare;
  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomials");
  poincare_cmd->add_option("--g", poincare.g)->required();
  poincare_cmd->add_flag("--invariant", poincare.invariant, "Invariant subring only");
  poincare_cmd->add_flag("--all-forms", poincare.all_forms, "Compute and compare every closed form");
  poincare_cmd->add_option("--at", poincare.at, "Evaluate at a rational t");

  ExteriorArgs exterior;
  auto* exterior_cmd = app.add_subcommand("exterior", "Exterior algebra and primitive decomposition");
  exterior_cmd->add_option("--g", exterior.g)->required();
  auto* ex_dims = exterior_cmd->add_flag("--primitive-dims", exterior.primitive_dims);
  auto* ex_dec = exterior_cmd->add_option("--decompose", exterior.decompose, "e.g. \"p1p3 - 2*p2\"");
  auto* ex_count = exterior_cmd->add_option("--basis-count", exterior.basis_count, "Degree n");
  auto* ex_check = exterior_cmd->add_flag("--check-decomposition", exterior.check);
  ex_dims->excludes(ex_dec)->excludes(ex_count)->excludes(ex_check);
  ex_dec->excludes(ex_count)->excludes(ex_check);
  ex_count->excludes(ex_check);

  long matrix_g = 0;
  auto* matrix_cmd = app.add_subcommand("matrix", "Degree-(2g+2) relation matrix and determinant");
  matrix_cmd->add_option("--g", matrix_g)->required();

  long prop41_g = 0;
  std::optional<long> prop41_d;
  auto* prop41_cmd = app.add_subcommand("prop41", "Coefficient sums of zeta_g against C(g,d) D_d");
  prop41_cmd->add_option("--g", prop41_g)->required();
  prop41_cmd->add_option("--d", prop41_d);

  long verify_g = kDefaultVerifyGenus;
  std::uint64_t verify_seed = kDefaultSeed;
  auto* verify_cmd = app.add_subcommand("verify-all", "Run the certification suite");
  verify_cmd->add_option("--g-max", verify_g)->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Context ctx{format == "json", out};
  try {
    if (zeta_cmd->parsed()) return run_zeta(ctx, zeta);
    if (zhat_cmd->parsed()) return run_zhat(ctx, zhat);
    if (lambda_cmd->parsed()) return run_lambda(ctx, lambda);
    if (groebner_cmd->parsed()) return run_groebner(ctx, groebner);
    if (poincare_cmd->parsed()) return run_poincare(ctx, poincare);
    if (exterior_cmd->parsed()) return run_exterior(ctx, exterior);
    if (matrix_cmd->parsed()) return run_matrix(ctx, matrix_g);
    if (prop41_cmd->parsed()) return run_prop41(ctx, prop41_g, prop41_d);
    if (verify_cmd->parsed()) return run_verify(ctx, verify_g, verify_seed);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace moduli
