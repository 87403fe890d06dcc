#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nodal/core/polynomial.hpp"

namespace nodal {

// Plane quartic f(z0, z1, z2) over Q.
class QuarticCurve {
 public:
  // Throws VariableSetMismatch, NotHomogeneous or NotDegree4.
  explicit QuarticCurve(QPoly f);

  const QPoly& f() const { return f_; }

 private:
  QPoly f_;
};

QuarticCurve klein_quartic();    // z0*z1^3 + z1*z2^3 + z2*z0^3
QuarticCurve fermat_quartic();   // z0^4 + z1^4 + z2^4

struct ChartEliminant {
  int chart = 0;            // index of the coordinate set to 1
  int eliminated_var = 0;   // variable removed by the resultants
  std::vector<QPoly> resultants;
  QPoly gcd;                // constant: no common zero of the partials in this chart
};

struct SmoothnessCertificate {
  // Integer coordinate change z -> A z applied before elimination (identity on
  // the first attempt).
  std::array<std::array<long, 3>, 3> coordinate_change{};
  std::vector<ChartEliminant> charts;
};

struct SingularWitness {
  std::uint32_t p = 0;
  std::array<std::uint32_t, 3> point{};
};

// Certifies that f and its partials have no common projective zero over the
// algebraic closure. Throws SingularQuartic (with a finite-field witness in
// the message when the scan finds one).
SmoothnessCertificate assert_smooth_quartic(const QuarticCurve& curve);

// Scans P^2(F_p) for a common zero of the three partials, primes in order.
std::optional<SingularWitness> find_singular_witness(const QPoly& f, std::span<const std::uint32_t> primes);

// Dense univariate helpers over Q (coefficients lowest degree first).
std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b);
std::vector<Rational> to_univariate(const QPoly& p, int var);

}  // namespace nodal
