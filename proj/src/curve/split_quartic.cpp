#include "nodal/curve/split_quartic.hpp"

#include <algorithm>
#include <random>

#include "nodal/core/linear_algebra.hpp"
#include "nodal/core/prime_field.hpp"

namespace nodal {

namespace {

using Point = std::array<std::uint32_t, 3>;

Point normalize(Point q, std::uint32_t p) {
  for (int i = 0; i < 3; ++i)
    if (q[i] != 0) {
      const std::uint32_t inv = inv_mod(q[i], p);
      for (auto& c : q) c = mul_mod(c, inv, p);
      break;
    }
  return q;
}

std::uint32_t monomial_at(const Monomial& m, const Point& q, std::uint32_t p) {
  std::uint32_t v = 1;
  for (int i = 0; i < 3; ++i) v = mul_mod(v, pow_mod(q[i], m.exp[i], p), p);
  return v;
}

// Rank of the evaluation matrix of the degree-d monomials at the points.
std::size_t evaluation_rank(const std::vector<Point>& pts, int degree, std::uint32_t p) {
  const auto mons = monomials_of_degree(3, degree);
  ModMatrix m(pts.size(), mons.size());
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < mons.size(); ++c) m(r, c) = monomial_at(mons[c], pts[r], p);
  return rank_mod_p(std::move(m), p);
}

bool general_position(const std::vector<Point>& pts, std::uint32_t p) {
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (evaluation_rank({pts[a], pts[b], pts[c]}, 1, p) < 3) return false;
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::vector<Point> six;
    for (std::size_t i = 0; i < n; ++i)
      if (i != skip) six.push_back(pts[i]);
    if (evaluation_rank(six, 2, p) < 6) return false;
  }
  return true;
}

FpPoly from_vector(const std::vector<Monomial>& mons, const std::vector<std::uint32_t>& v, std::uint32_t p) {
  std::vector<FpPoly::Term> terms;
  for (std::size_t i = 0; i < mons.size(); ++i) terms.push_back({mons[i], Fp{v[i], p}});
  return FpPoly::from_terms(VarSet::z(), {p}, std::move(terms));
}

// Coefficients of the branch quartic on the degree-4 monomials, or empty when
// the linear system is not one-dimensional.
std::vector<std::uint32_t> branch_quartic(const std::vector<Point>& pts, std::uint32_t p) {
  const auto cubics = monomials_of_degree(3, 3);
  ModMatrix cond(pts.size(), cubics.size());
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < cubics.size(); ++c) cond(r, c) = monomial_at(cubics[c], pts[r], p);
  const auto net = nullspace_mod_p(cond, p);
  if (net.size() != 3) return {};
  std::vector<FpPoly> c;
  for (const auto& v : net) c.push_back(from_vector(cubics, v, p));

  FpPoly d[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d[i][j] = c[i].derivative(j);
  const FpPoly jac = d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) -
                     d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
                     d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
  const FpPoly target = jac * jac;

  const auto quartics = monomials_of_degree(3, 4);
  const auto rows = monomials_of_degree(3, 12);
  ModMatrix sys(rows.size(), quartics.size() + 1);
  for (std::size_t k = 0; k < quartics.size(); ++k) {
    const FpPoly img = FpPoly::term(VarSet::z(), {p}, quartics[k], Fp{1, p}).compose(c);
    for (std::size_t r = 0; r < rows.size(); ++r) sys(r, k) = img.coefficient(rows[r]).v;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) sys(r, quartics.size()) = (-target.coefficient(rows[r])).v;
  const auto ns = nullspace_mod_p(sys, p);
  if (ns.size() != 1 || ns[0].back() == 0) return {};
  return {ns[0].begin(), ns[0].end() - 1};
}

}  // namespace

SplitQuartic split_bitangent_quartic(std::uint32_t p, std::uint64_t seed, int max_draws) {
  PrimeField field(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coord(0, p - 1);
  const auto quartics = monomials_of_degree(3, 4);
  const long half = static_cast<long>(p - 1) / 2;

  for (int draw = 1; draw <= max_draws; ++draw) {
    std::vector<Point> pts;
    while (pts.size() < 7) {
      Point q{coord(rng), coord(rng), coord(rng)};
      if (q == Point{0, 0, 0}) continue;
      q = normalize(q, p);
      if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
    }
    if (!general_position(pts, p)) continue;
    const auto coeffs = branch_quartic(pts, p);
    if (coeffs.empty() || std::find(coeffs.begin(), coeffs.end(), 0u) != coeffs.end()) continue;

    std::vector<QPoly::Term> terms;
    for (std::size_t k = 0; k < quartics.size(); ++k) {
      const long v = coeffs[k];
      terms.push_back({quartics[k], Rational(v > half ? v - static_cast<long>(p) : v)});
    }
    QPoly f = QPoly::from_terms(VarSet::z(), {}, std::move(terms));
    const std::uint32_t primes[] = {p};
    if (find_singular_witness(f, primes)) continue;
    return {QuarticCurve(std::move(f)), p, pts, draw};
  }
  throw Error(ErrorKind::SearchExhausted,
              "no split quartic mod " + std::to_string(p) + " after " + std::to_string(max_draws) + " draws");
}

}  // namespace nodal
