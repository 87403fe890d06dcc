#pragma once

#include <vector>

#include "nodal/core/linear_algebra.hpp"
#include "nodal/curve/mu_kernel.hpp"

namespace nodal {

// The bidegree-(6,6) block of C[u,v] modulo V = f(u)*(2,6) + f(v)*(6,2).
// {f(u), f(v)} is a Groebner basis (coprime leading monomials), so the normal
// form factors as N (x) N with N the degree-6 normal form modulo f.
class IdealBlock {
 public:
  explicit IdealBlock(const QuarticCurve& curve);

  std::size_t ambient_dim() const { return sextics_.size() * sextics_.size(); }        // 784
  std::size_t quotient_dim() const { return standard_.size() * standard_.size(); }     // 484
  std::size_t ideal_dim() const { return ambient_dim() - quotient_dim(); }             // 300

  // Coordinates of the normal form of a bidegree-(6,6) form, indexed
  // i * 22 + j over (standard u-monomial i, standard v-monomial j). Zero iff
  // w lies in V.
  std::vector<Rational> reduce(const QPoly& w) const;

  // The 336 spanning products f(u) * (2,6)-monomial and f(v) * (6,2)-monomial.
  std::vector<QPoly> generators() const;

  const std::vector<Monomial>& sextic_monomials() const { return sextics_; }
  const std::vector<Monomial>& standard_monomials() const { return standard_; }
  const QPoly& f_u() const { return fu_; }
  const QPoly& f_v() const { return fv_; }

 private:
  std::size_t sextic_index(const Monomial& m) const;

  QPoly f_, fu_, fv_;
  std::vector<Monomial> sextics_;   // 28
  std::vector<Monomial> standard_;  // 22
  RationalMatrix normal_;           // 28 x 22
};

// Builds the block and checks dim V = 300 by the rank of the generators
// modulo a large prime; throws DimensionUnexpected otherwise.
IdealBlock ideal_subspace_basis(const QuarticCurve& curve);

// Rank of the generators' coordinate vectors in the 784-dimensional space
// modulo p.
std::size_t ideal_generator_rank_mod_p(const IdealBlock& block, std::uint32_t p);

}  // namespace nodal
