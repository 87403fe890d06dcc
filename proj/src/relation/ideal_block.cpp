#include "nodal/relation/ideal_block.hpp"

#include "nodal/curve/sections.hpp"

namespace nodal {

namespace {

// The three exponents starting at `first`, as a z-monomial.
Monomial half_monomial(const Monomial& m, int first) {
  Monomial out;
  for (int k = 0; k < 3; ++k) out.exp[k] = m.exp[first + k];
  return out;
}

}  // namespace

IdealBlock::IdealBlock(const QuarticCurve& curve)
    : f_(curve.f()), fu_(in_u(curve.f())), fv_(in_v(curve.f())), sextics_(monomials_of_degree(3, 6)) {
  QuarticNormalForm nf(curve);
  standard_ = nf.standard_monomials(6);
  normal_ = RationalMatrix(sextics_.size(), standard_.size(), Rational(0));
  for (std::size_t i = 0; i < sextics_.size(); ++i) {
    auto c = nf.coordinates(QPoly::term(VarSet::z(), {}, sextics_[i], Rational(1)), 6);
    for (std::size_t j = 0; j < c.size(); ++j) normal_(i, j) = c[j];
  }
}

std::size_t IdealBlock::sextic_index(const Monomial& m) const {
  for (std::size_t i = 0; i < sextics_.size(); ++i)
    if (sextics_[i] == m) return i;
  throw Error(ErrorKind::WrongBidegree, "monomial is not of degree 6: " + format_monomial(m, VarSet::z()));
}

std::vector<Rational> IdealBlock::reduce(const QPoly& w) const {
  if (w.vars() != VarSet::uv()) throw Error(ErrorKind::VariableSetMismatch, "expected a form in u, v");
  if (!w.is_bihomogeneous(3, 6, 6)) throw Error(ErrorKind::WrongBidegree, "expected bidegree (6,6)");
  const std::size_t n = sextics_.size(), s = standard_.size();
  // Collect coefficients as a 28 x 28 grid, contract the v side, then the u side.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows(n);
  for (const auto& t : w.terms()) rows[sextic_index(half_monomial(t.mono, 0))].push_back({sextic_index(half_monomial(t.mono, 3)), t.coeff});
  std::vector<Rational> out(s * s, Rational(0));
  std::vector<Rational> tmp(s);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].empty()) continue;
    std::fill(tmp.begin(), tmp.end(), Rational(0));
    for (const auto& [b, c] : rows[a])
      for (std::size_t j = 0; j < s; ++j)
        if (sgn(normal_(b, j)) != 0) tmp[j] += c * normal_(b, j);
    for (std::size_t i = 0; i < s; ++i) {
      const Rational& ni = normal_(a, i);
      if (sgn(ni) == 0) continue;
      for (std::size_t j = 0; j < s; ++j)
        if (sgn(tmp[j]) != 0) out[i * s + j] += ni * tmp[j];
    }
  }
  return out;
}

std::vector<QPoly> IdealBlock::generators() const {
  std::vector<QPoly> out;
  auto quad = monomials_of_degree(3, 2);
  for (const auto& a : quad)
    for (const auto& b : sextics_) {
      Monomial m;
      for (int k = 0; k < 3; ++k) {
        m.exp[k] = a.exp[k];
        m.exp[3 + k] = b.exp[k];
      }
      out.push_back(fu_ * QPoly::term(VarSet::uv(), {}, m, Rational(1)));
    }
  for (const auto& a : sextics_)
    for (const auto& b : quad) {
      Monomial m;
      for (int k = 0; k < 3; ++k) {
        m.exp[k] = a.exp[k];
        m.exp[3 + k] = b.exp[k];
      }
      out.push_back(fv_ * QPoly::term(VarSet::uv(), {}, m, Rational(1)));
    }
  return out;
}

std::size_t ideal_generator_rank_mod_p(const IdealBlock& block, std::uint32_t p) {
  const auto& sx = block.sextic_monomials();
  auto gens = block.generators();
  ModMatrix m(gens.size(), block.ambient_dim(), 0);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (const auto& t : gens[r].terms()) {
      std::size_t a = 0, b = 0;
      const Monomial mu = half_monomial(t.mono, 0), mv = half_monomial(t.mono, 3);
      while (sx[a] != mu) ++a;
      while (sx[b] != mv) ++b;
      m(r, a * sx.size() + b) = reduce_rational(t.coeff, p);
    }
  return rank_mod_p(std::move(m), p);
}

IdealBlock ideal_subspace_basis(const QuarticCurve& curve) {
  IdealBlock block(curve);
  const std::uint32_t p = elimination_primes(1)[0];
  std::size_t rank = ideal_generator_rank_mod_p(block, p);
  if (rank != block.ideal_dim() || block.ideal_dim() != 300)
    throw Error(ErrorKind::DimensionUnexpected,
                "ideal block has dimension " + std::to_string(rank) + ", expected " + std::to_string(block.ideal_dim()));
  return block;
}

}  // namespace nodal
