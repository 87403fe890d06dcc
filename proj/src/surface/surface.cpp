#include "nodal/surface/surface.hpp"

#include "nodal/core/resultant.hpp"

namespace nodal {

namespace {

QPoly xvar(int i) { return QPoly::variable(VarSet::x(), i); }

}  // namespace

SexticSurface make_surface(QPoly p, std::string origin) {
  if (p.vars() != VarSet::x()) throw Error(ErrorKind::VariableSetMismatch, "surface must be in x0..x3");
  if (!p.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, to_string(p));
  if (p.total_degree() != 6) throw Error(ErrorKind::NotSextic, "degree " + std::to_string(p.total_degree()));
  return {std::move(p), {std::move(origin)}};
}

SexticSurface pullback_to_p3(const QPoly& rel) {
  if (rel.vars() != VarSet::y()) throw Error(ErrorKind::VariableSetMismatch, "relation must be in y0..y3");
  QPoly p = rel.compose({xvar(0), xvar(1), xvar(2), xvar(3) * xvar(3)});
  return make_surface(std::move(p), "pullback");
}

RationalMatrix diagonal_transform(const std::vector<Rational>& d) {
  RationalMatrix m(d.size(), d.size(), Rational(0));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

SexticSurface apply_point_transform(const SexticSurface& s, const RationalMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw Error(ErrorKind::IndexOutOfRange, "transform must be 4x4");
  if (sgn(determinant(m)) == 0) throw Error(ErrorKind::SingularMatrix, "transform is not invertible");
  std::vector<QPoly> images;
  for (int i = 0; i < 4; ++i) {
    QPoly row(VarSet::x());
    for (int j = 0; j < 4; ++j)
      if (sgn(m(i, j)) != 0) row += xvar(j) * m(i, j);
    images.push_back(std::move(row));
  }
  SexticSurface out{s.P.compose(images), s.provenance};
  std::string desc = "transform[";
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) desc += (i || j ? "," : "") + to_string(m(i, j));
  out.provenance.push_back(desc + "]");
  return out;
}

QPoly flip_x3(const QPoly& p) { return p.compose({xvar(0), xvar(1), xvar(2), -xvar(3)}); }

EvenDecomposition decompose_even(const SexticSurface& s) {
  std::array<std::vector<QPoly::Term>, 4> parts;
  std::string odd;
  Rational c(0);
  for (const auto& t : s.P.terms()) {
    const int e = t.mono.exp[3];
    if (e % 2) {
      odd += (odd.empty() ? "" : ", ") + format_monomial(t.mono, VarSet::x());
      continue;
    }
    Monomial m = t.mono;
    m.exp[3] = 0;
    if (e == 6)
      c = t.coeff;
    else
      parts[e / 2].push_back({m, t.coeff});
  }
  if (!odd.empty()) throw Error(ErrorKind::OddPowerPresent, "odd powers of x3 in " + odd);
  EvenDecomposition d;
  d.p6 = QPoly::from_terms(VarSet::x(), {}, std::move(parts[0]));
  d.p4 = QPoly::from_terms(VarSet::x(), {}, std::move(parts[1]));
  d.p2 = QPoly::from_terms(VarSet::x(), {}, std::move(parts[2]));
  d.c = c;
  return d;
}

QPoly cubic_discriminant(const EvenDecomposition& d) {
  if (sgn(d.c) == 0) throw Error(ErrorKind::ZeroLeadingCoefficient, "coefficient of x3^6 vanishes");
  // Work over x0, x1, x2, T with T in the x3 slot.
  const QPoly T = xvar(3);
  QPoly cubic = QPoly::constant(VarSet::x(), d.c) * T.pow(3) + d.p2 * T.pow(2) + d.p4 * T + d.p6;
  QPoly res = sylvester_resultant(cubic, cubic.derivative(3), 3);
  return res * Rational(Rational(-1) / d.c);
}

}  // namespace nodal
