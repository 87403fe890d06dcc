#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nodal/curve/quartic.hpp"

namespace nodal {

// Integer quartic whose reduction mod p has all 28 bitangents defined over
// F_p. It is built as the branch curve of the degree-2 map P^2 -> P^2 given
// by the net of cubics through seven F_p-points in general position (the
// anticanonical model of a degree-2 del Pezzo surface), then lifted to
// coefficients in [-(p-1)/2, (p-1)/2].
//
// Generic quartics do not have this property: over F_p most bitangents are
// only defined over extensions, so a census over a small field sees a subset
// of the 56 nodes. This family gives a dense random quartic whose nodes are
// all visible over F_{p^2}.
struct SplitQuartic {
  QuarticCurve curve;
  std::uint32_t p = 0;
  std::vector<std::array<std::uint32_t, 3>> base_points;  // normalized, seven
  int draws = 0;                                          // point sets tried
};

// Draws seeded point sets until one is in general position (no three on a
// line, no six on a conic) and gives a quartic with all 15 coefficients
// nonzero mod p and no singular F_p-point. Throws NotPrime/BadModulus for a
// bad p and SearchExhausted after max_draws.
SplitQuartic split_bitangent_quartic(std::uint32_t p, std::uint64_t seed, int max_draws = 10000);

}  // namespace nodal
