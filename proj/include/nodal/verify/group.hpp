#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "nodal/verify/census.hpp"

namespace nodal {

// 4x4 matrix over F_q modulo scalars, scaled so the first nonzero entry
// (row-major) is 1.
struct GroupElement {
  std::array<Fq, 16> m;

  static GroupElement from_matrix(std::array<Fq, 16> entries);  // normalizes
  static GroupElement identity(const FqField& field);
  static GroupElement diagonal(const std::array<Fq, 4>& d);

  const Fq& operator()(int i, int j) const { return m[4 * i + j]; }
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m == b.m; }
  // Matrix times column vector, normalized.
  ProjPoint apply(const ProjPoint& pt) const;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

// s = sum_k chi(k) zeta^k over k = 1..6, chi the quadratic character mod 7.
// Checks s^2 = -7.
Fq gauss_sum_sqrt(const Fq& zeta7);

struct KleinGenerators {
  Fq zeta, s;
  GroupElement g7, g2;
};

// g7 = diag(w, w^4, w^2, 1) and g2 = (1/s)[[a,c,b,0],[c,b,a,0],[b,a,c,0],[0,0,0,s]]
// with a = w^2 - w^5, b = w - w^6, c = w^4 - w^3. Throws NoSeventhRoot.
KleinGenerators klein_generators(const FqField& field);

struct GroupClosure {
  std::vector<GroupElement> elements;  // BFS order from the identity
  bool involution_central = false;     // diag(1,1,1,-1) present and central
};

// Closure of the generators; throws ClosureBudgetExceeded past `budget`
// elements.
std::vector<GroupElement> close_group(const std::vector<GroupElement>& generators, std::size_t budget = 100000);

// Closure of {g7, g2}; throws OrderMismatch unless the order is 336 and the
// covering involution is central.
GroupClosure build_G336(const FqField& field);

struct OrbitData {
  std::vector<ProjPoint> orbit;  // sorted by point_less
  std::size_t stabilizer = 0;
};

OrbitData orbit_and_stabilizer(const std::vector<GroupElement>& group, const ProjPoint& pt);

// lambda with form(g x) = lambda form(x); throws NotInvariant with a witness
// monomial.
Fq invariance_scalar(const FqPoly& form, const GroupElement& g);

}  // namespace nodal
