#include "nodal/verify/group.hpp"

#include <deque>
#include <unordered_set>

namespace nodal {

GroupElement GroupElement::from_matrix(std::array<Fq, 16> entries) {
  auto it = std::find_if(entries.begin(), entries.end(), [](const Fq& x) { return !x.is_zero(); });
  if (it == entries.end()) throw Error(ErrorKind::SingularMatrix, "zero matrix");
  const Fq inv = it->inverse();
  for (auto& x : entries) x = x * inv;
  return {entries};
}

GroupElement GroupElement::identity(const FqField& field) {
  return diagonal({field.one(), field.one(), field.one(), field.one()});
}

GroupElement GroupElement::diagonal(const std::array<Fq, 4>& d) {
  std::array<Fq, 16> e;
  e.fill(d[0].field->zero());
  for (int i = 0; i < 4; ++i) e[5 * i] = d[i];
  return from_matrix(e);
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  std::array<Fq, 16> e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Fq s = a(i, 0) * b(0, j);
      for (int k = 1; k < 4; ++k) s += a(i, k) * b(k, j);
      e[4 * i + j] = s;
    }
  return GroupElement::from_matrix(e);
}

ProjPoint GroupElement::apply(const ProjPoint& pt) const {
  if (pt.size() != 4) throw Error(ErrorKind::IndexOutOfRange, "group acts on P^3");
  ProjPoint out;
  for (int i = 0; i < 4; ++i) {
    Fq s = (*this)(i, 0) * pt[0];
    for (int j = 1; j < 4; ++j) s += (*this)(i, j) * pt[j];
    out.push_back(s);
  }
  return normalize_point(std::move(out));
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = 0;
  for (const auto& x : g.m) h = h * 1000003u ^ (std::size_t(x.a) << 16 | x.b);
  return h;
}

Fq gauss_sum_sqrt(const Fq& zeta) {
  const FqField& f = *zeta.field;
  Fq s = f.zero(), z = f.one();
  for (int k = 1; k <= 6; ++k) {
    z = z * zeta;
    const bool residue = k == 1 || k == 2 || k == 4;
    s = residue ? s + z : s - z;
  }
  if (s * s != f.from_int(-7)) throw Error(ErrorKind::NoSeventhRoot, "Gauss sum does not square to -7; zeta is not primitive");
  return s;
}

KleinGenerators klein_generators(const FqField& field) {
  auto zeta = field.zeta7();
  if (!zeta) throw Error(ErrorKind::NoSeventhRoot, field.name() + " has no primitive seventh root of unity");
  KleinGenerators k;
  k.zeta = *zeta;
  k.s = gauss_sum_sqrt(k.zeta);
  auto w = [&](int e) { return k.zeta.pow(e); };
  k.g7 = GroupElement::diagonal({w(1), w(4), w(2), field.one()});
  const Fq a = w(2) - w(5), b = w(1) - w(6), c = w(4) - w(3), o = field.zero();
  // The overall 1/s is a scalar and drops out projectively.
  k.g2 = GroupElement::from_matrix({a, c, b, o, c, b, a, o, b, a, c, o, o, o, o, k.s});
  return k;
}

std::vector<GroupElement> close_group(const std::vector<GroupElement>& generators, std::size_t budget) {
  if (generators.empty()) throw Error(ErrorKind::IndexOutOfRange, "no generators");
  const GroupElement id = GroupElement::identity(*generators[0].m[0].field);
  std::vector<GroupElement> elements{id};
  std::unordered_set<GroupElement, GroupElementHash> seen{id};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      GroupElement h = elements[i] * g;
      if (seen.insert(h).second) {
        elements.push_back(h);
        if (elements.size() > budget)
          throw Error(ErrorKind::ClosureBudgetExceeded, "closure exceeds " + std::to_string(budget) + " elements");
      }
    }
  }
  return elements;
}

GroupClosure build_G336(const FqField& field) {
  const KleinGenerators k = klein_generators(field);
  GroupClosure out;
  out.elements = close_group({k.g7, k.g2}, 10000);
  if (out.elements.size() != 336)
    throw Error(ErrorKind::OrderMismatch, "group generated by g7, g2 has order " + std::to_string(out.elements.size()));
  const GroupElement inv = GroupElement::diagonal({field.one(), field.one(), field.one(), -field.one()});
  const bool present = std::find(out.elements.begin(), out.elements.end(), inv) != out.elements.end();
  bool central = true;
  for (const auto& g : out.elements) central &= g * inv == inv * g;
  out.involution_central = present && central;
  if (!out.involution_central) throw Error(ErrorKind::OrderMismatch, "diag(1,1,1,-1) is not a central element");
  return out;
}

OrbitData orbit_and_stabilizer(const std::vector<GroupElement>& group, const ProjPoint& pt) {
  OrbitData d;
  const ProjPoint base = normalize_point(pt);
  for (const auto& g : group) {
    ProjPoint img = g.apply(base);
    if (img == base) ++d.stabilizer;
    d.orbit.push_back(std::move(img));
  }
  std::sort(d.orbit.begin(), d.orbit.end(), point_less);
  d.orbit.erase(std::unique(d.orbit.begin(), d.orbit.end()), d.orbit.end());
  return d;
}

Fq invariance_scalar(const FqPoly& form, const GroupElement& g) {
  const VarSet vars = form.vars();
  if (vars.size() != 4) throw Error(ErrorKind::VariableSetMismatch, "expected a form in four variables");
  if (form.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "invariance of the zero form");
  const auto domain = form.domain();
  std::vector<FqPoly> images;
  for (int i = 0; i < 4; ++i) {
    FqPoly row(vars, domain);
    for (int j = 0; j < 4; ++j)
      if (!g(i, j).is_zero()) row += FqPoly::variable(vars, j, domain) * g(i, j);
    images.push_back(std::move(row));
  }
  const FqPoly moved = form.compose(images);
  const auto& lead = form.leading_term();
  const Fq lambda = moved.coefficient(lead.mono) * lead.coeff.inverse();
  const FqPoly diff = moved - form * lambda;
  if (!diff.is_zero()) {
    const Monomial& w = diff.leading_term().mono;
    throw Error(ErrorKind::NotInvariant, "form(g x) is not a multiple of form: ratio at " +
                                             format_monomial(lead.mono, vars) + " differs from ratio at " +
                                             format_monomial(w, vars));
  }
  return lambda;
}

}  // namespace nodal
