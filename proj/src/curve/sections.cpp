#include "nodal/curve/sections.hpp"

namespace nodal {

namespace {

QPoly uv(int i) { return QPoly::variable(VarSet::uv(), i); }

}  // namespace

GaussSections build_gauss_sections() {
  auto p = [](int i, int j) { return uv(i) * uv(3 + j) - uv(j) * uv(3 + i); };
  return {p(0, 1), p(0, 2), p(1, 2)};
}

std::array<QPoly, 6> section_products(const GaussSections& s) {
  return {s.p01 * s.p01, s.p01 * s.p02, s.p01 * s.p12, s.p02 * s.p02, s.p02 * s.p12, s.p12 * s.p12};
}

QPoly in_u(const QPoly& z_poly) { return z_poly.relabel(VarSet::uv(), {0, 1, 2}); }
QPoly in_v(const QPoly& z_poly) { return z_poly.relabel(VarSet::uv(), {3, 4, 5}); }

QPoly swap_uv(const QPoly& form) {
  if (form.vars() != VarSet::uv()) throw Error(ErrorKind::VariableSetMismatch, "expected a form in u, v");
  return form.relabel(VarSet::uv(), {3, 4, 5, 0, 1, 2});
}

QPoly diagonal_restriction(const QPoly& form) {
  if (form.vars() != VarSet::uv()) throw Error(ErrorKind::VariableSetMismatch, "expected a form in u, v");
  return form.relabel(VarSet::z(), {0, 1, 2, 0, 1, 2});
}

Splitting split_to_bidegree(const QuarticCurve& curve) {
  std::vector<QPoly::Term> terms;
  for (const auto& t : curve.f().terms()) {
    Monomial m;
    int used = 0;
    for (int i = 0; i < 3; ++i) {
      int d = std::min<int>(t.mono.exp[i], 2 - used);
      used += d;
      m.exp[i] = static_cast<std::uint8_t>(d);
      m.exp[3 + i] = static_cast<std::uint8_t>(t.mono.exp[i] - d);
    }
    terms.push_back({m, t.coeff});
  }
  QPoly g = QPoly::from_terms(VarSet::uv(), {}, std::move(terms));
  return {g, g + swap_uv(g)};
}

Splitting split_to_bidegree(const QuarticCurve& curve, const QPoly& explicit_g) {
  if (explicit_g.vars() != VarSet::uv()) throw Error(ErrorKind::VariableSetMismatch, "g must be in u0..u2, v0..v2");
  if (explicit_g.is_zero() || !explicit_g.is_bihomogeneous(3, 2, 2))
    throw Error(ErrorKind::WrongBidegree, "g must have bidegree (2,2): " + to_string(explicit_g));
  QPoly diag = diagonal_restriction(explicit_g);
  if (diag != curve.f())
    throw Error(ErrorKind::ExplicitGMismatch, "g(z,z) = " + to_string(diag) + " differs from f = " + to_string(curve.f()));
  return {explicit_g, explicit_g + swap_uv(explicit_g)};
}

bool Perturbation::is_identity() const {
  if (lambda != 1) return false;
  for (const auto& c : coeffs)
    if (sgn(c) != 0) return false;
  return true;
}

QPoly perturb_gtilde(const QPoly& base, const GaussSections& sections, const Perturbation& perturbation) {
  if (sgn(perturbation.lambda) == 0) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
  QPoly out = base * perturbation.lambda;
  auto products = section_products(sections);
  for (int m = 0; m < 6; ++m)
    if (sgn(perturbation.coeffs[m]) != 0) out += products[m] * perturbation.coeffs[m];
  return out;
}

namespace {

// Flips the sign of z_k (and u_k, v_k) for each k with flip bit set.
QPoly flip_signs(const QPoly& p, unsigned flip) {
  const int n = p.vars() == VarSet::uv() ? 6 : 3;
  std::vector<QPoly::Term> out;
  for (const auto& t : p.terms()) {
    int parity = 0;
    for (int i = 0; i < n; ++i)
      if (flip >> (i % 3) & 1u) parity += t.mono.exp[i];
    out.push_back({t.mono, parity % 2 ? Rational(-t.coeff) : t.coeff});
  }
  return QPoly::from_terms(p.vars(), {}, std::move(out));
}

}  // namespace

std::array<bool, 6> equivariant_products(const QuarticCurve& curve, const QPoly& g_sym) {
  // Pair indices of p01, p02, p12 in the order used by section_products.
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  static constexpr int kProducts[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  std::array<bool, 6> keep;
  keep.fill(true);
  for (unsigned flip = 1; flip < 8; ++flip) {
    if (flip_signs(curve.f(), flip) != curve.f() || flip_signs(g_sym, flip) != g_sym) continue;
    auto sign = [&](int pair) {
      int s = (flip >> kPairs[pair][0] & 1u) + (flip >> kPairs[pair][1] & 1u);
      return s % 2 ? -1 : 1;
    };
    for (int m = 0; m < 6; ++m)
      if (sign(kProducts[m][0]) * sign(kProducts[m][1]) < 0) keep[m] = false;
  }
  return keep;
}

SectionBasis make_section_basis(const QuarticCurve& curve, const std::optional<QPoly>& explicit_g,
                                const Perturbation& perturbation) {
  Splitting split = explicit_g ? split_to_bidegree(curve, *explicit_g) : split_to_bidegree(curve);
  SectionBasis basis;
  basis.gauss = build_gauss_sections();
  basis.g = split.g;
  basis.perturbation = perturbation;
  basis.g_tilde = perturb_gtilde(split.g_sym, basis.gauss, perturbation);
  basis.provenance = explicit_g ? "explicit" : "greedy";
  return basis;
}

}  // namespace nodal
