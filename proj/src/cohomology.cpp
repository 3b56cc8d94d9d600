#include "moduli/cohomology.hpp"

#include "moduli/groebner.hpp"

namespace moduli {

StructuralClass canonical_class(long genus, const ClassRepresentative& parts) {
  check_exterior_genus(genus);
  StructuralClass out(genus);
  const InvariantPolynomial gamma = InvariantPolynomial::gamma();
  for (const auto& [element, poly] : parts) {
    if (element.genus() != genus)
      throw Error(ErrorCode::GenusMismatch, "class part has genus " +
                                                std::to_string(element.genus()));
    if (poly.is_zero()) continue;
    for (long k = 0; k <= 2 * genus; ++k) {
      ExteriorElement piece = element.component(k);
      if (piece.is_zero()) continue;
      for (const auto& part : lefschetz_decompose(piece)) {
        const long j = k - 2 * part.m;
        const InvariantPolynomial folded = pow(gamma, static_cast<unsigned>(part.m)) * poly;
        for (std::size_t idx = 0; idx < part.coordinates.size(); ++idx) {
          if (sgn(part.coordinates[idx]) == 0) continue;
          out.components_[ComponentKey{j, idx}] += folded * part.coordinates[idx];
        }
      }
    }
  }
  for (auto it = out.components_.begin(); it != out.components_.end();) {
    it->second = normal_form(it->second, invariant_groebner_basis(genus - it->first.k));
    if (it->second.is_zero())
      it = out.components_.erase(it);
    else
      ++it;
  }
  return out;
}

ClassRepresentative lift(const StructuralClass& x) {
  ClassRepresentative parts;
  for (const auto& [key, poly] : x.components()) {
    auto basis = primitive_basis(x.genus(), key.k);
    parts.emplace_back(basis->vectors.at(key.index), poly);
  }
  return parts;
}

StructuralClass add_classes(const StructuralClass& x, const StructuralClass& y) {
  if (x.genus() != y.genus()) throw Error(ErrorCode::GenusMismatch, "class sum");
  ClassRepresentative parts = lift(x);
  for (auto& part : lift(y)) parts.push_back(std::move(part));
  return canonical_class(x.genus(), parts);
}

StructuralClass scale_class(const StructuralClass& x, const Rational& s) {
  ClassRepresentative parts = lift(x);
  for (auto& [e, p] : parts) p *= s;
  return canonical_class(x.genus(), parts);
}

StructuralClass multiply_classes(const StructuralClass& x, const StructuralClass& y) {
  if (x.genus() != y.genus())
    throw Error(ErrorCode::GenusMismatch,
                std::to_string(x.genus()) + " vs " + std::to_string(y.genus()));
  ClassRepresentative product;
  for (const auto& [ex, px] : lift(x))
    for (const auto& [ey, py] : lift(y)) {
      ExteriorElement e = wedge(ex, ey);
      if (e.is_zero()) continue;
      product.emplace_back(std::move(e), px * py);
    }
  return canonical_class(x.genus(), product);
}

int exterior_parity(const StructuralClass& x) {
  int parity = 0;
  bool seen = false;
  for (const auto& [key, poly] : x.components()) {
    const int p = static_cast<int>(key.k % 2);
    if (seen && p != parity) return -1;
    parity = p;
    seen = true;
  }
  return parity;
}

std::string format_class(const StructuralClass& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [key, poly] : x.components()) {
    if (!out.empty()) out += " + ";
    auto basis = primitive_basis(x.genus(), key.k);
    out += "(" + format_exterior(basis->vectors.at(key.index)) + ") * (" + format_poly(poly) + ")";
  }
  return out;
}

}  // namespace moduli
