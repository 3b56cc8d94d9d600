#pragma once

// JSON forms of the core values. Rationals are always strings ("num/den").

#include <json.hpp>

#include "moduli/exact_math.hpp"
#include "moduli/exterior.hpp"
#include "moduli/invariant_ring.hpp"
#include "moduli/poincare.hpp"

namespace moduli {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

/// {"terms": [{"a": i, "b": j, "g": p, "coeff": "n/d"}, ...]} descending.
Json poly_to_json(const InvariantPolynomial& p);
InvariantPolynomial poly_from_json(const Json& j);

/// [["1", "0"], ["-1/2", "3"]]
Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

/// {"coefficients": {"0": "1", "3": "4"}} ascending in the exponent.
Json series_to_json(const SeriesPolynomial& p);
SeriesPolynomial series_from_json(const Json& j);

/// {"genus": g, "terms": [{"subset": [1, 3], "coeff": "2"}, ...]}
Json exterior_to_json(const ExteriorElement& x);
ExteriorElement exterior_from_json(const Json& j);

}  // namespace moduli
