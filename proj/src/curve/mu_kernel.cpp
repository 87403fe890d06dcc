#include "nodal/curve/mu_kernel.hpp"

#include <algorithm>

namespace nodal {

QuarticNormalForm::QuarticNormalForm(const QuarticCurve& curve) : f_(curve.f()), lead_(curve.f().leading_term().mono) {}

QPoly QuarticNormalForm::reduce(const QPoly& p) const {
  return divide_by(p, std::vector<QPoly>{f_}, rational_inverse).second;
}

std::vector<Monomial> QuarticNormalForm::standard_monomials(int degree) const {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(3, degree))
    if (!lead_.divides(m)) out.push_back(m);
  return out;
}

std::vector<Rational> QuarticNormalForm::coordinates(const QPoly& p, int degree) const {
  QPoly r = reduce(p);
  auto basis = standard_monomials(degree);
  std::vector<Rational> out;
  out.reserve(basis.size());
  for (const auto& m : basis) out.push_back(r.coefficient(m));
  return out;
}

namespace {

const std::vector<Monomial>& quadrics() {
  static const std::vector<Monomial> q = monomials_of_degree(3, 2);
  return q;
}

std::vector<std::pair<int, int>> square_pairs() {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) out.emplace_back(i, j);
  return out;
}

Monomial uv_monomial(const Monomial& mu, const Monomial& mv) {
  Monomial m;
  for (int k = 0; k < 3; ++k) {
    m.exp[k] = mu.exp[k];
    m.exp[3 + k] = mv.exp[k];
  }
  return m;
}

}  // namespace

QPoly symmetric_square_form(int i, int j) {
  const auto& q = quadrics();
  if (i == j) return QPoly::term(VarSet::uv(), {}, uv_monomial(q[i], q[i]), Rational(1));
  Rational half(1, 2);
  return QPoly::term(VarSet::uv(), {}, uv_monomial(q[i], q[j]), half) +
         QPoly::term(VarSet::uv(), {}, uv_monomial(q[j], q[i]), half);
}

std::vector<Rational> symmetric_square_coordinates(const QPoly& form) {
  if (form.vars() != VarSet::uv() || !form.is_bihomogeneous(3, 2, 2))
    throw Error(ErrorKind::WrongBidegree, "expected a bidegree-(2,2) form");
  if (form != swap_uv(form)) throw Error(ErrorKind::NotSymmetric, to_string(form));
  const auto& q = quadrics();
  std::vector<Rational> out;
  for (auto [i, j] : square_pairs()) {
    Rational c = form.coefficient(uv_monomial(q[i], q[j]));
    out.push_back(i == j ? c : Rational(2 * c));
  }
  return out;
}

RationalMatrix mu_matrix(const QuarticCurve& curve) {
  QuarticNormalForm nf(curve);
  const auto& q = quadrics();
  const auto pairs = square_pairs();
  const auto target = nf.standard_monomials(4);
  RationalMatrix m(target.size(), pairs.size(), Rational(0));
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    Monomial prod = q[pairs[c].first] * q[pairs[c].second];
    auto coords = nf.coordinates(QPoly::term(VarSet::z(), {}, prod, Rational(1)), 4);
    for (std::size_t r = 0; r < target.size(); ++r) m(r, c) = coords[r];
  }
  return m;
}

MuKernel mu_kernel(const QuarticCurve& curve) {
  RationalMatrix m = mu_matrix(curve);
  auto ns = nullspace_exact(m);
  MuKernel k;
  k.h0_omega2 = static_cast<int>(quadrics().size());
  k.source_dim = static_cast<int>(m.cols());
  k.target_dim = static_cast<int>(m.rows());
  k.rank = static_cast<int>(m.cols() - ns.basis.size());
  const auto pairs = square_pairs();
  for (const auto& v : ns.basis) {
    QPoly form(VarSet::uv());
    for (std::size_t c = 0; c < pairs.size(); ++c)
      if (sgn(v[c]) != 0) form += symmetric_square_form(pairs[c].first, pairs[c].second) * v[c];
    k.basis.push_back(std::move(form));
  }
  if (k.basis.size() != 7)
    throw Error(ErrorKind::KernelDimensionUnexpected, "ker mu has dimension " + std::to_string(k.basis.size()));
  return k;
}

SectionCheck check_section_basis(const QuarticCurve& curve, const SectionBasis& sections) {
  QuarticNormalForm nf(curve);
  std::vector<QPoly> seven;
  for (const auto& p : section_products(sections.gauss)) seven.push_back(p);
  seven.push_back(sections.g_tilde);

  RationalMatrix coords(7, 21);
  for (std::size_t s = 0; s < seven.size(); ++s) {
    if (!nf.reduce(diagonal_restriction(seven[s])).is_zero())
      throw Error(ErrorKind::NotInKernel, "section " + std::to_string(s) + " does not vanish on the diagonal mod f");
    auto c = symmetric_square_coordinates(seven[s]);
    for (std::size_t j = 0; j < 21; ++j) coords(s, j) = c[j];
  }
  RationalMatrix six(6, 21);
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t j = 0; j < 21; ++j) six(s, j) = coords(s, j);

  SectionCheck check;
  check.all_in_kernel = true;
  check.product_rank = static_cast<int>(rank_gauss(six));
  check.total_rank = static_cast<int>(rank_gauss(coords));
  if (check.product_rank != 6)
    throw Error(ErrorKind::KernelDimensionUnexpected,
                "products p_ij p_kl have rank " + std::to_string(check.product_rank));
  if (check.total_rank != 7) throw Error(ErrorKind::GTildeInSpan, "g_tilde lies in the span of the products p_ij p_kl");
  return check;
}

}  // namespace nodal
