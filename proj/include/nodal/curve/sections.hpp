#pragma once

#include <array>
#include <optional>
#include <string>

#include "nodal/curve/quartic.hpp"

namespace nodal {

// Bidegree-(1,1) forms p_ij(u,v) = u_i v_j - u_j v_i in u0..u2, v0..v2.
struct GaussSections {
  QPoly p01, p02, p12;
};

GaussSections build_gauss_sections();

// p01^2, p01*p02, p01*p12, p02^2, p02*p12, p12^2.
std::array<QPoly, 6> section_products(const GaussSections& s);

// Embeds a z-polynomial as a u- or v-polynomial.
QPoly in_u(const QPoly& z_poly);
QPoly in_v(const QPoly& z_poly);
// g(u,v) -> g(v,u).
QPoly swap_uv(const QPoly& form);
// g(u,v) -> g(z,z).
QPoly diagonal_restriction(const QPoly& form);

struct Splitting {
  QPoly g;      // bidegree (2,2) with g(z,z) = f(z)
  QPoly g_sym;  // g(u,v) + g(v,u)
};

// Greedy rule: each monomial z^e of f goes to u^d v^(e-d) where d takes as
// much of each exponent as fits in degree 2, scanning variables in order.
Splitting split_to_bidegree(const QuarticCurve& curve);
// Explicit g; throws WrongBidegree or ExplicitGMismatch.
Splitting split_to_bidegree(const QuarticCurve& curve, const QPoly& explicit_g);

// lambda * g_tilde + sum_m coeffs[m] * section_products()[m].
struct Perturbation {
  Rational lambda = 1;
  std::array<Rational, 6> coeffs{};

  bool is_identity() const;
};

// Throws ZeroLambda.
QPoly perturb_gtilde(const QPoly& base, const GaussSections& sections, const Perturbation& perturbation);

// The seven sections y0 = p01, y1 = p02, y2 = p12, y3 = g_tilde.
struct SectionBasis {
  GaussSections gauss;
  QPoly g;
  QPoly g_tilde;
  std::string provenance;  // "greedy" or "explicit"
  Perturbation perturbation;

  std::array<QPoly, 4> weighted_generators() const { return {gauss.p01, gauss.p02, gauss.p12, g_tilde}; }
};

// Products p_ij p_kl fixed by every coordinate sign change diag(+-1,+-1,+-1)
// that preserves both f and g_sym. Perturbing only along these keeps the
// construction equivariant; for a quartic without such symmetries all six
// entries are true.
std::array<bool, 6> equivariant_products(const QuarticCurve& curve, const QPoly& g_sym);

SectionBasis make_section_basis(const QuarticCurve& curve, const std::optional<QPoly>& explicit_g,
                                const Perturbation& perturbation = {});

}  // namespace nodal
