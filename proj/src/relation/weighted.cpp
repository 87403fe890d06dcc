#include "nodal/relation/weighted.hpp"

namespace nodal {

int weighted_degree(const Monomial& m) { return m.exp[0] + m.exp[1] + m.exp[2] + 2 * m.exp[3]; }

std::vector<Monomial> enumerate_weighted_monomials() {
  std::vector<Monomial> out;
  for (int b = 0; b <= 3; ++b)
    for (Monomial m : monomials_of_degree(3, 6 - 2 * b)) {
      m.exp[3] = static_cast<std::uint8_t>(b);
      out.push_back(m);
    }
  return out;
}

bool is_weighted_homogeneous(const QPoly& p, int degree) {
  if (p.vars() != VarSet::y()) return false;
  for (const auto& t : p.terms())
    if (weighted_degree(t.mono) != degree) return false;
  return true;
}

}  // namespace nodal
