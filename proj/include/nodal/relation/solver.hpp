#pragma once

#include <array>
#include <vector>

#include "nodal/relation/ideal_block.hpp"
#include "nodal/relation/weighted.hpp"

namespace nodal {

// Images of weighted monomials under y0,y1,y2,y3 -> p01,p02,p12,g_tilde.
// Powers are cached, so repeated calls are cheap.
class SectionSubstitution {
 public:
  explicit SectionSubstitution(const SectionBasis& sections);
  QPoly operator()(const Monomial& y_monomial);
  QPoly apply(const QPoly& y_poly);

 private:
  const QPoly& power(int var, int e);
  std::array<QPoly, 4> gens_;
  std::array<std::vector<QPoly>, 4> powers_;
};

QPoly substitute_sections(const Monomial& y_monomial, const SectionBasis& sections);

struct WeightedSexticRelation {
  QPoly p;                     // in y0..y3
  Rational raw_y3_cubed;       // y3^3 coefficient of the reduced-echelon nullspace vector
  std::size_t nullspace_dim = 0;
  std::vector<std::size_t> modular_nullspace_dims;  // one per checking prime
  std::vector<std::uint32_t> checking_primes;
  std::size_t quotient_rows = 0;  // 484
  std::size_t primes_used = 0;
};

// The 484 x 50 matrix whose column j is the reduced image of weighted
// monomial j.
RationalMatrix relation_system(const IdealBlock& block, const SectionBasis& sections, unsigned threads = 1);

// Throws NullspaceDimZero, NullspaceDimHigh or ZeroLeadingCoefficient.
WeightedSexticRelation solve_weighted_relation(const QuarticCurve& curve, const SectionBasis& sections,
                                               unsigned threads = 1);
WeightedSexticRelation solve_weighted_relation(const IdealBlock& block, const SectionBasis& sections,
                                               unsigned threads = 1);

struct RelationCertificate {
  QPoly image;  // rel(sections)
  QPoly A;      // bidegree (2,6)
  QPoly B;      // bidegree (6,2)
};

// rel(sections) = f(u) A + f(v) B, verified exactly. Throws NotInIdeal, or
// ZeroLeadingCoefficient when the y3^3 coefficient vanishes.
RelationCertificate certify_relation(const QPoly& rel, const QuarticCurve& curve, const SectionBasis& sections);

// {p0, p2, p4, p6}: the coefficient of y3^(3-i) as a form of degree 2i in
// y0..y2 (still over the y variable set).
std::array<QPoly, 4> y3_graded_pieces(const QPoly& rel);

}  // namespace nodal
