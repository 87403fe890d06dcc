#pragma once

#include <vector>

#include "nodal/core/polynomial.hpp"

namespace nodal {

// Weights (1,1,1,2) on y0..y3.
int weighted_degree(const Monomial& m);

// The 50 monomials of weighted degree 6 in y0..y3, ordered by the y3 exponent
// b = 0..3 and then grlex-descending in y0..y2.
std::vector<Monomial> enumerate_weighted_monomials();

bool is_weighted_homogeneous(const QPoly& p, int degree);

}  // namespace nodal
