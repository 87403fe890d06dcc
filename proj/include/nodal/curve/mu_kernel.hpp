#pragma once

#include <vector>

#include "nodal/core/linear_algebra.hpp"
#include "nodal/curve/sections.hpp"

namespace nodal {

// Reduction of forms in z0..z2 modulo the single quartic f. Since {f} is a
// Groebner basis of (f), the remainder is canonical and spans the standard
// monomials (those not divisible by the leading monomial of f).
class QuarticNormalForm {
 public:
  explicit QuarticNormalForm(const QuarticCurve& curve);

  QPoly reduce(const QPoly& p) const;
  const Monomial& leading_monomial() const { return lead_; }
  // Degree-d monomials not divisible by the leading monomial, grlex-descending.
  std::vector<Monomial> standard_monomials(int degree) const;
  // Coordinates of reduce(p) on standard_monomials(degree).
  std::vector<Rational> coordinates(const QPoly& p, int degree) const;

 private:
  QPoly f_;
  Monomial lead_;
};

struct MuKernel {
  int h0_omega2 = 0;   // degree-2 monomials
  int source_dim = 0;  // symmetric square
  int target_dim = 0;  // degree-4 forms modulo f
  int rank = 0;
  // Kernel as symmetric bidegree-(2,2) forms.
  std::vector<QPoly> basis;
};

// Symmetric square basis element e_ij <-> (m_i(u) m_j(v) + m_j(u) m_i(v)) / 2
// over the degree-2 monomials m_0..m_5, index pairs i <= j in row order.
QPoly symmetric_square_form(int i, int j);
// Inverse of the map above: 21 coordinates of a symmetric (2,2)-form. Throws
// WrongBidegree or NotSymmetric.
std::vector<Rational> symmetric_square_coordinates(const QPoly& form);

// Matrix of mu: S^2 H0(w^2) (21) -> H0(w^4) (14).
RationalMatrix mu_matrix(const QuarticCurve& curve);

// Throws KernelDimensionUnexpected if the kernel is not 7-dimensional.
MuKernel mu_kernel(const QuarticCurve& curve);

struct SectionCheck {
  bool all_in_kernel = false;
  int product_rank = 0;
  int total_rank = 0;
};

// Throws NotInKernel, KernelDimensionUnexpected (dependent products) or
// GTildeInSpan.
SectionCheck check_section_basis(const QuarticCurve& curve, const SectionBasis& sections);

}  // namespace nodal
