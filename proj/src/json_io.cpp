#include "moduli/json_io.hpp"

#include <string>

namespace moduli {

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "rational must be a JSON string");
  return parse_rational(j.get<std::string>());
}

Json monomial_to_json(const Monomial& m) { return Json{{"a", m.a}, {"b", m.b}, {"g", m.c}}; }

Monomial monomial_from_json(const Json& j) {
  return Monomial{j.at("a").get<std::uint32_t>(), j.at("b").get<std::uint32_t>(),
                  j.at("g").get<std::uint32_t>()};
}

Json poly_to_json(const InvariantPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json term = monomial_to_json(m);
    term["coeff"] = rational_to_json(c);
    terms.push_back(std::move(term));
  }
  return Json{{"terms", std::move(terms)}};
}

InvariantPolynomial poly_from_json(const Json& j) {
  InvariantPolynomial p;
  for (const auto& term : j.at("terms"))
    p.add_term(monomial_from_json(term), rational_from_json(term.at("coeff")));
  return p;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    std::vector<Rational> values;
    for (const auto& entry : row) values.push_back(rational_from_json(entry));
    rows.push_back(std::move(values));
  }
  return RationalMatrix::from_rows(rows);
}

Json series_to_json(const SeriesPolynomial& p) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : p.coefficients()) coeffs[std::to_string(e)] = c.get_str();
  return Json{{"coefficients", std::move(coeffs)}};
}

SeriesPolynomial series_from_json(const Json& j) {
  SeriesPolynomial p;
  for (const auto& [key, value] : j.at("coefficients").items()) {
    Rational c = rational_from_json(value);
    if (c.get_den() != 1) throw Error(ErrorCode::ParseError, "series coefficients are integers");
    p.add_term(std::stol(key), c.get_num());
  }
  return p;
}

Json exterior_to_json(const ExteriorElement& x) {
  Json terms = Json::array();
  for (const auto& [s, c] : x.terms())
    terms.push_back(Json{{"subset", subset_indices(s)}, {"coeff", rational_to_json(c)}});
  return Json{{"genus", x.genus()}, {"terms", std::move(terms)}};
}

ExteriorElement exterior_from_json(const Json& j) {
  const long genus = j.at("genus").get<long>();
  ExteriorElement x(genus);
  for (const auto& term : j.at("terms")) {
    // Indices may arrive unsorted; wedge in the given order to pick up the sign.
    ExteriorElement t = ExteriorElement::one(genus);
    for (const auto& index : term.at("subset"))
      t = wedge(t, ExteriorElement::psi(genus, index.get<long>()));
    x += t * rational_from_json(term.at("coeff"));
  }
  return x;
}

}  // namespace moduli
