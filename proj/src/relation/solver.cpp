#include "nodal/relation/solver.hpp"

#include <future>

namespace nodal {

SectionSubstitution::SectionSubstitution(const SectionBasis& sections) : gens_(sections.weighted_generators()) {
  for (int i = 0; i < 4; ++i) powers_[i].push_back(QPoly::one(VarSet::uv()));
}

const QPoly& SectionSubstitution::power(int var, int e) {
  auto& pw = powers_[var];
  while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * gens_[var]);
  return pw[e];
}

QPoly SectionSubstitution::operator()(const Monomial& m) {
  QPoly out = QPoly::one(VarSet::uv());
  for (int i = 0; i < 4; ++i)
    if (m.exp[i] != 0) out = out * power(i, m.exp[i]);
  return out;
}

QPoly SectionSubstitution::apply(const QPoly& y_poly) {
  if (y_poly.vars() != VarSet::y()) throw Error(ErrorKind::VariableSetMismatch, "expected a polynomial in y0..y3");
  std::vector<QPoly::Term> acc;
  for (const auto& t : y_poly.terms()) {
    QPoly img = (*this)(t.mono) * t.coeff;
    acc.insert(acc.end(), img.terms().begin(), img.terms().end());
  }
  return QPoly::from_terms(VarSet::uv(), {}, std::move(acc));
}

QPoly substitute_sections(const Monomial& y_monomial, const SectionBasis& sections) {
  SectionSubstitution sub(sections);
  return sub(y_monomial);
}

RationalMatrix relation_system(const IdealBlock& block, const SectionBasis& sections, unsigned threads) {
  const auto basis = enumerate_weighted_monomials();
  RationalMatrix m(block.quotient_dim(), basis.size(), Rational(0));
  threads = std::max(1u, threads);
  auto work = [&](std::size_t stripe) {
    SectionSubstitution sub(sections);
    for (std::size_t c = stripe; c < basis.size(); c += threads) {
      auto col = block.reduce(sub(basis[c]));
      for (std::size_t r = 0; r < col.size(); ++r) m(r, c) = col[r];
    }
  };
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, work, t));
  for (auto& j : jobs) j.get();
  return m;
}

WeightedSexticRelation solve_weighted_relation(const QuarticCurve& curve, const SectionBasis& sections,
                                               unsigned threads) {
  return solve_weighted_relation(ideal_subspace_basis(curve), sections, threads);
}

WeightedSexticRelation solve_weighted_relation(const IdealBlock& block, const SectionBasis& sections,
                                               unsigned threads) {
  const auto basis = enumerate_weighted_monomials();
  RationalMatrix system = relation_system(block, sections, threads);
  auto ns = nullspace_exact(system, threads);

  WeightedSexticRelation rel;
  rel.nullspace_dim = ns.basis.size();
  rel.quotient_rows = system.rows();
  rel.primes_used = ns.primes_used;
  // Two checking primes well away from the elimination primes.
  for (std::uint32_t p : elimination_primes(2, 1u << 30)) {
    rel.checking_primes.push_back(p);
    rel.modular_nullspace_dims.push_back(system.cols() - rank_mod_p(reduce_matrix(system, p), p));
  }
  if (rel.nullspace_dim == 0) throw Error(ErrorKind::NullspaceDimZero, "the sections satisfy no weighted sextic relation");
  if (rel.nullspace_dim > 1)
    throw Error(ErrorKind::NullspaceDimHigh,
                "relation space has dimension " + std::to_string(rel.nullspace_dim));

  const auto& v = ns.basis[0];
  rel.raw_y3_cubed = v.back();  // y3^3 is the last basis monomial
  if (sgn(rel.raw_y3_cubed) == 0)
    throw Error(ErrorKind::ZeroLeadingCoefficient, "relation has no y3^3 term");
  const Rational scale = Rational(-1) / rel.raw_y3_cubed;
  std::vector<QPoly::Term> terms;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (sgn(v[j]) != 0) terms.push_back({basis[j], Rational(v[j] * scale)});
  rel.p = QPoly::from_terms(VarSet::y(), {}, std::move(terms));
  return rel;
}

RelationCertificate certify_relation(const QPoly& rel, const QuarticCurve& curve, const SectionBasis& sections) {
  if (rel.vars() != VarSet::y()) throw Error(ErrorKind::VariableSetMismatch, "relation must be in y0..y3");
  if (sgn(rel.coefficient(Monomial{0, 0, 0, 3})) == 0)
    throw Error(ErrorKind::ZeroLeadingCoefficient, "relation has no y3^3 term");
  SectionSubstitution sub(sections);
  RelationCertificate cert;
  cert.image = sub.apply(rel);
  const QPoly fu = in_u(curve.f()), fv = in_v(curve.f());
  auto [q, r] = divide_by(cert.image, std::vector<QPoly>{fu, fv}, rational_inverse);
  if (!r.is_zero())
    throw Error(ErrorKind::NotInIdeal, "remainder modulo (f(u), f(v)) has " + std::to_string(r.size()) + " terms");
  cert.A = std::move(q[0]);
  cert.B = std::move(q[1]);
  if (fu * cert.A + fv * cert.B != cert.image) throw Error(ErrorKind::NotInIdeal, "cofactor identity failed");
  if (!cert.A.is_zero() && !cert.A.is_bihomogeneous(3, 2, 6))
    throw Error(ErrorKind::NotInIdeal, "cofactor A is not of bidegree (2,6)");
  if (!cert.B.is_zero() && !cert.B.is_bihomogeneous(3, 6, 2))
    throw Error(ErrorKind::NotInIdeal, "cofactor B is not of bidegree (6,2)");
  return cert;
}

std::array<QPoly, 4> y3_graded_pieces(const QPoly& rel) {
  std::array<std::vector<QPoly::Term>, 4> buckets;
  for (const auto& t : rel.terms()) {
    const int b = t.mono.exp[3];
    if (b > 3) throw Error(ErrorKind::WrongBidegree, "y3 exponent above 3");
    Monomial m = t.mono;
    m.exp[3] = 0;
    buckets[3 - b].push_back({m, t.coeff});
  }
  std::array<QPoly, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = QPoly::from_terms(VarSet::y(), {}, std::move(buckets[i]));
  return out;
}

}  // namespace nodal
