#include <random>
#include <set>

#include "doctest.h"
#include "nodal/relation/solver.hpp"
#include "nodal/surface/surface.hpp"
#include "nodal/verify/census.hpp"
#include "nodal/verify/dual.hpp"
#include "nodal/verify/group.hpp"
#include "support.hpp"

using namespace nodal;
using namespace nodal::testing;

namespace {

const char* kQ =
    "x0^5*x2 - 5*x0^2*x1^2*x2^2 + x0*x1^5 + x1*x2^5 + x0^3*x1*x3^2 + x0*x2^3*x3^2 + x1^3*x2*x3^2 - x3^6";

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

// Every point of P^3(F_q), first nonzero coordinate 1.
std::vector<ProjPoint> all_points(const FqField& f) {
  std::vector<ProjPoint> out;
  const std::uint64_t q = f.order();
  for (int lead = 0; lead < 4; ++lead) {
    const int free = 3 - lead;
    std::uint64_t count = 1;
    for (int i = 0; i < free; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      ProjPoint pt(4, f.zero());
      pt[lead] = f.one();
      std::uint64_t r = idx;
      for (int i = lead + 1; i < 4; ++i) {
        pt[i] = f.element(r % q);
        r /= q;
      }
      out.push_back(pt);
    }
  }
  return out;
}

std::vector<ProjPoint> naive_singular(const FqPoly& form, const FqField& f) {
  std::vector<FqPoly> partials;
  for (int i = 0; i < 4; ++i) partials.push_back(form.derivative(i));
  std::vector<ProjPoint> out;
  for (const auto& pt : all_points(f)) {
    bool all = form.evaluate(std::span<const Fq>(pt)).is_zero();
    for (const auto& d : partials) all = all && d.evaluate(std::span<const Fq>(pt)).is_zero();
    if (all) out.push_back(pt);
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

RationalMatrix plane_block(const RationalMatrix& m) {
  RationalMatrix out(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("finite field construction and arithmetic") {
  CHECK(kind_of([] { FqField(3, 1); }) == ErrorKind::BadModulus);
  CHECK(kind_of([] { FqField(2, 1); }) == ErrorKind::BadModulus);
  CHECK(kind_of([] { FqField(21, 1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { FqField(65537, 1); }) == ErrorKind::FieldTooLarge);
  FqField f(13, 2);
  CHECK(f.name() == "F_13^2");
  CHECK(FqField(29, 1).name() == "F_29");
  CHECK(f.order() == 169);
  // Every nonzero element is invertible and the multiplicative group is cyclic of order 168.
  for (std::uint64_t i = 1; i < f.order(); ++i) {
    Fq x = f.element(i);
    CHECK(x * x.inverse() == f.one());
    CHECK(x.pow(168) == f.one());
    CHECK(f.index(x) == i);
  }
  CHECK(f.from_rational(make_rational(1, 2)) * f.from_int(2) == f.one());
  CHECK(kind_of([&] { f.from_rational(make_rational(1, 13)); }) == ErrorKind::BadReductionPrime);
  CHECK(parse_field_spec("13^2").k == 2);
  CHECK(parse_field_spec("29").p == 29);
  CHECK_THROWS(parse_field_spec("13^3"));
  CHECK_THROWS(parse_field_spec("x"));
}

TEST_CASE("seventh roots of unity and the Gauss sum") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, int>>{{29, 1}, {13, 2}, {43, 1}}) {
    FqField f(p, k);
    auto z = f.zeta7();
    REQUIRE(z);
    CHECK(z->pow(7) == f.one());
    CHECK(*z != f.one());
    Fq s = gauss_sum_sqrt(*z);
    CHECK(s * s == f.from_int(-7));
  }
  CHECK_FALSE(FqField(13, 1).zeta7());
  CHECK(kind_of([] { klein_generators(FqField(13, 1)); }) == ErrorKind::NoSeventhRoot);
}

TEST_CASE("census agrees with a naive scan over F_5 and F_7") {
  std::mt19937_64 rng(21);
  for (std::uint32_t p : {5u, 7u}) {
    FqField f(p, 1);
    std::vector<QPoly> forms = {X(kQ), X("x0*x1 - x2*x3"), X("x0^2*x1 + x2^3 + x3^3"), X("x0^2 + x1^2")};
    for (int i = 0; i < 3; ++i) forms.push_back(random_form(rng, VarSet::x(), 3, 2));
    for (const auto& form : forms) {
      CAPTURE(to_string(form));
      FqPoly reduced = reduce_mod_q(form, f);
      auto fast = scan_singularities(reduced, f);
      auto slow = naive_singular(reduced, f);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("census is independent of the kernel table and thread count") {
  FqField f(13, 2);
  FqPoly q = reduce_mod_q(X(kQ), f);
  ScanOptions a;
  a.kernels = &simd::scalar_kernels();
  a.threads = 1;
  ScanOptions b;
  b.threads = 3;
  CHECK(scan_singularities(q, f, a) == scan_singularities(q, f, b));
}

TEST_CASE("scan budget") {
  FqField f(13, 2);
  ScanOptions tiny;
  tiny.budget = 1000;
  CHECK(kind_of([&] { scan_singularities(reduce_mod_q(X(kQ), f), f, tiny); }) == ErrorKind::FieldTooLarge);
}

TEST_CASE("common zeros of linear forms") {
  FqField f(7, 1);
  auto pts = projective_common_zeros({reduce_mod_q(X("x0 - x1"), f), reduce_mod_q(X("x2"), f)}, f);
  // The line x0 = x1, x2 = 0 in P^3 has q + 1 points.
  CHECK(pts.size() == 8);
}

TEST_CASE("Hessian rank") {
  FqField f(29, 1);
  const ProjPoint origin{f.zero(), f.zero(), f.zero(), f.one()};
  CHECK(hessian_rank(reduce_mod_q(X("x0^2*x3^4 + x1^2*x3^4 + x2^2*x3^4 + x0^6"), f), origin) == 3);
  CHECK(hessian_rank(reduce_mod_q(X("x0^2*x3^4 + x1^2*x3^4 + x2^3*x3^3"), f), origin) == 2);
  CHECK(hessian_rank(reduce_mod_q(X("x0^2*x3^4 + x1^3*x3^3 + x2^3*x3^3"), f), origin) == 1);
  CHECK(hessian_rank(reduce_mod_q(X("x0^3*x3^3 + x1^3*x3^3 + x2^3*x3^3"), f), origin) == 0);
  CHECK(kind_of([&] { hessian_rank(reduce_mod_q(X("x0*x3^5 + x1^6"), f), origin); }) == ErrorKind::PointNotSingular);
}

TEST_CASE("node census of the Klein sextic") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, int>>{{29, 1}, {13, 2}}) {
    FqField f(p, k);
    NodeReport r = node_census(X(kQ), f);
    CHECK(r.points.size() == 56);
    CHECK(r.all_ordinary);
    for (int rank : r.hessian_ranks) CHECK(rank == 3);
  }
  FqField f(29, 1);
  NodeReport smooth = node_census(X("x0^6 + x1^6 + x2^6 + x3^6"), f);
  CHECK(smooth.points.empty());
}

TEST_CASE("group of order 336") {
  FqField f(29, 1);
  KleinGenerators gens = klein_generators(f);
  GroupClosure g = build_G336(f);
  CHECK(g.elements.size() == 336);
  CHECK(g.involution_central);
  const Fq one = f.one();
  GroupElement inv = GroupElement::diagonal({one, one, one, -one});
  CHECK(std::find(g.elements.begin(), g.elements.end(), inv) != g.elements.end());
  for (const auto& e : g.elements) CHECK(e * inv == inv * e);

  FqPoly q = reduce_mod_q(X(kQ), f);
  CHECK_NOTHROW(invariance_scalar(q, gens.g7));
  CHECK_NOTHROW(invariance_scalar(q, gens.g2));
  GroupElement bad = GroupElement::diagonal({f.from_int(2), one, one, one});
  CHECK(kind_of([&] { invariance_scalar(q, bad); }) == ErrorKind::NotInvariant);

  NodeReport census = node_census(X(kQ), f);
  OrbitData orbit = orbit_and_stabilizer(g.elements, {one, one, one, one});
  CHECK(orbit.orbit.size() == 56);
  CHECK(orbit.stabilizer == 6);
  CHECK(orbit.orbit == census.points);
}

TEST_CASE("group elements") {
  FqField f(29, 1);
  GroupElement id = GroupElement::identity(f);
  GroupElement d = GroupElement::diagonal({f.from_int(2), f.from_int(2), f.from_int(2), f.from_int(2)});
  CHECK(d == id);
  CHECK(close_group({GroupElement::diagonal({f.one(), -f.one(), f.one(), f.one()})}).size() == 2);
  KleinGenerators gens = klein_generators(f);
  CHECK(kind_of([&] { close_group({gens.g7, gens.g2}, 100); }) == ErrorKind::ClosureBudgetExceeded);
  ProjPoint pt{f.one(), f.from_int(3), f.zero(), f.from_int(5)};
  CHECK((gens.g7 * gens.g2).apply(pt) == gens.g7.apply(gens.g2.apply(pt)));
}

TEST_CASE("discriminant vanishes on the dual curve") {
  const QuarticCurve klein = klein_quartic();
  EvenDecomposition d = decompose_even(make_surface(X(kQ)));
  QPoly disc = cubic_discriminant(d);
  RationalMatrix plane = plane_block(diagonal_transform({1, -1, 1, 1}));
  FqField f29(29, 1);
  DualCheckResult ok = dual_curve_samples_check(klein, disc, f29, plane);
  CHECK(ok.pass);
  CHECK(ok.curve_points == 24);
  CHECK(ok.zeros == ok.smooth_points);

  DualCheckResult literal = dual_curve_samples_check(klein, disc, f29, plane, 100000, DualConvention::Gradient);
  CHECK_FALSE(literal.pass);
  CHECK(literal.zeros < literal.smooth_points);

  std::mt19937_64 rng(12);
  QPoly random12 = random_form(rng, VarSet::x(), 12, 5, 3);
  DualCheckResult bad = dual_curve_samples_check(klein, random12, f29, plane);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.failures.empty());

  CHECK(kind_of([&] { dual_curve_samples_check(klein, X("29*x0^12"), f29, plane); }) ==
        ErrorKind::DiscIdenticallyZeroModP);
}

TEST_CASE("Fermat discriminant vanishes on its dual curve over F_13") {
  const QuarticCurve fermat = fermat_quartic();
  SectionBasis s = make_section_basis(fermat, std::nullopt);
  QPoly rel = solve_weighted_relation(fermat, s).p;
  const RationalMatrix t = diagonal_transform({1, -1, 1, 1});
  SexticSurface surf = apply_point_transform(pullback_to_p3(rel), t);
  QPoly disc = cubic_discriminant(decompose_even(surf));
  DualCheckResult r = dual_curve_samples_check(fermat, disc, FqField(13, 1), plane_block(t));
  CHECK(r.curve_points > 0);
  CHECK(r.pass);
}

}  // TEST_SUITE
