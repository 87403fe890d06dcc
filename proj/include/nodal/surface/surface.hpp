#pragma once

#include <string>
#include <vector>

#include "nodal/core/linear_algebra.hpp"
#include "nodal/core/polynomial.hpp"

namespace nodal {

// Homogeneous sextic in x0..x3 over Q.
struct SexticSurface {
  QPoly P;
  std::vector<std::string> provenance;
};

// Validates variables, homogeneity and degree 6 (NotSextic, NotHomogeneous).
SexticSurface make_surface(QPoly p, std::string origin = "input");

// y_i -> x_i (i <= 2), y3 -> x3^2.
SexticSurface pullback_to_p3(const QPoly& weighted_relation);

// s(M x). Throws SingularMatrix for a non-invertible M.
SexticSurface apply_point_transform(const SexticSurface& s, const RationalMatrix& m);
RationalMatrix diagonal_transform(const std::vector<Rational>& d);

// s = p6 + p4 x3^2 + p2 x3^4 + c x3^6 with p_d in x0..x2 (over the x
// variable set).
struct EvenDecomposition {
  QPoly p6, p4, p2;
  Rational c;
};

// Throws OddPowerPresent listing the offending monomials.
EvenDecomposition decompose_even(const SexticSurface& s);

// s(x0, x1, x2, -x3).
QPoly flip_x3(const QPoly& p);

// Discriminant of c T^3 + p2 T^2 + p4 T + p6 in T: -Res_T(P, P') / c.
// Throws ZeroLeadingCoefficient when c = 0.
QPoly cubic_discriminant(const EvenDecomposition& d);

}  // namespace nodal
