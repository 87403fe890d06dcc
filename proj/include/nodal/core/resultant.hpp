#pragma once

#include <vector>

#include "nodal/core/polynomial.hpp"

namespace nodal {

// coeffs[i] is the coefficient of var^i (var removed from each monomial).
template <class K>
std::vector<Polynomial<K>> coefficients_in(const Polynomial<K>& p, int var) {
  int d = p.degree_in(var);
  std::vector<std::vector<typename Polynomial<K>::Term>> buckets(std::max(d, 0) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    int e = m.exp[var];
    m.exp[var] = 0;
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Polynomial<K>> out;
  for (auto& b : buckets) out.push_back(Polynomial<K>::from_terms(p.vars(), p.domain(), std::move(b)));
  return out;
}

// Determinant by fraction-free (Bareiss) elimination with exact polynomial
// division.
template <class K, class Inverse>
Polynomial<K> bareiss_determinant(std::vector<std::vector<Polynomial<K>>> m, VarSet vars,
                                  typename Polynomial<K>::Domain domain, Inverse&& inverse) {
  using P = Polynomial<K>;
  const std::size_t n = m.size();
  if (n == 0) return P::one(vars, domain);
  P prev = P::one(vars, domain);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return P(vars, domain);
      std::swap(m[r], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        P num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(num, prev, inverse);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Determinant of the Sylvester matrix of a and b with respect to var: rows of
// a's coefficients (deg_var b of them) above rows of b's. The result lives in
// the same variable set and does not involve var. A factor of degree zero in
// var gives the usual power.
template <class K, class Inverse>
Polynomial<K> sylvester_resultant(const Polynomial<K>& a, const Polynomial<K>& b, int var, Inverse&& inverse) {
  using P = Polynomial<K>;
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant of zero polynomial");
  const int m = a.degree_in(var), n = b.degree_in(var);
  if (m == 0) return a.pow(static_cast<unsigned>(n));
  if (n == 0) return b.pow(static_cast<unsigned>(m));
  auto ca = coefficients_in(a, var);
  auto cb = coefficients_in(b, var);
  const int size = m + n;
  std::vector<std::vector<P>> s(size, std::vector<P>(size, P(a.vars(), a.domain())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = ca[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = cb[n - j];
  return bareiss_determinant(std::move(s), a.vars(), a.domain(), inverse);
}

inline QPoly sylvester_resultant(const QPoly& a, const QPoly& b, int var) {
  return sylvester_resultant(a, b, var, rational_inverse);
}

}  // namespace nodal
