#pragma once

#include <string>
#include <vector>

#include "nodal/core/linear_algebra.hpp"
#include "nodal/curve/quartic.hpp"
#include "nodal/verify/census.hpp"

namespace nodal {

enum class DualConvention {
  // The tangent line (L0:L1:L2) = grad f, written in Gauss coordinates
  // (p01:p02:p12) = (L2:-L1:L0) and carried through the inverse of the
  // plane part of the surface transform.
  GaussCoordinates,
  // grad f taken literally as the point.
  Gradient,
};

struct DualCheckResult {
  std::size_t curve_points = 0;
  std::size_t smooth_points = 0;
  std::size_t zeros = 0;          // sampled dual points where disc vanishes
  std::vector<std::string> failures;  // first few nonvanishing samples
  bool pass = false;
};

// `disc` is a form in x0..x2 (over the x variable set); `plane_transform`
// is the upper-left 3x3 block of the point transform applied to the surface.
// Throws NoCurvePoints or DiscIdenticallyZeroModP.
DualCheckResult dual_curve_samples_check(const QuarticCurve& curve, const QPoly& disc, const FqField& field,
                                         const RationalMatrix& plane_transform, std::size_t sample_budget = 100000,
                                         DualConvention convention = DualConvention::GaussCoordinates);

}  // namespace nodal
