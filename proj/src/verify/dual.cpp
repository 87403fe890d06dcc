#include "nodal/verify/dual.hpp"

namespace nodal {

DualCheckResult dual_curve_samples_check(const QuarticCurve& curve, const QPoly& disc, const FqField& field,
                                         const RationalMatrix& plane_transform, std::size_t sample_budget,
                                         DualConvention convention) {
  const FqPoly f = reduce_mod_q(curve.f(), field);
  const FqPoly d = reduce_mod_q(disc, field);
  if (d.is_zero()) throw Error(ErrorKind::DiscIdenticallyZeroModP, "discriminant vanishes identically mod " + std::to_string(field.p()));
  const RationalMatrix inv = inverse(plane_transform);
  std::array<std::array<Fq, 3>, 3> back;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) back[i][j] = field.from_rational(inv(i, j));

  const auto points = projective_common_zeros({f}, field);
  DualCheckResult r;
  r.curve_points = points.size();
  if (points.empty()) throw Error(ErrorKind::NoCurvePoints, "no points on the curve over " + field.name());
  const std::array<FqPoly, 3> grad{f.derivative(0), f.derivative(1), f.derivative(2)};
  for (const auto& pt : points) {
    if (r.smooth_points >= sample_budget) break;
    std::array<Fq, 3> L;
    for (int i = 0; i < 3; ++i) L[i] = grad[i].evaluate(pt);
    if (L[0].is_zero() && L[1].is_zero() && L[2].is_zero()) continue;
    ++r.smooth_points;
    std::array<Fq, 3> y = L;
    if (convention == DualConvention::GaussCoordinates) {
      const std::array<Fq, 3> gauss{L[2], -L[1], L[0]};
      for (int i = 0; i < 3; ++i) y[i] = back[i][0] * gauss[0] + back[i][1] * gauss[1] + back[i][2] * gauss[2];
    }
    const std::vector<Fq> at{y[0], y[1], y[2], field.zero()};
    if (d.evaluate(at).is_zero())
      ++r.zeros;
    else if (r.failures.size() < 8)
      r.failures.push_back(to_string(pt) + " -> " + to_string(ProjPoint{y.begin(), y.end()}));
  }
  r.pass = r.smooth_points > 0 && r.zeros == r.smooth_points;
  return r;
}

}  // namespace nodal
