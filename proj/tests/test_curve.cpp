#include <random>

#include "doctest.h"
#include "nodal/curve/mu_kernel.hpp"
#include "nodal/curve/split_quartic.hpp"
#include "support.hpp"

using namespace nodal;
using namespace nodal::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("quartic validation") {
  CHECK(kind_of([] { QuarticCurve(Z("z0^3*z1 + z2")); }) == ErrorKind::NotHomogeneous);
  CHECK(kind_of([] { QuarticCurve(Z("z0^3")); }) == ErrorKind::NotDegree4);
  CHECK(kind_of([] { QuarticCurve(X("x0^4")); }) == ErrorKind::VariableSetMismatch);
  CHECK(to_string(klein_quartic().f()) == "z0^3*z2 + z0*z1^3 + z1*z2^3");
}

TEST_CASE("smoothness certificates") {
  CHECK_NOTHROW(assert_smooth_quartic(klein_quartic()));
  CHECK_NOTHROW(assert_smooth_quartic(fermat_quartic()));
  CHECK(kind_of([] { assert_smooth_quartic(QuarticCurve(Z("z0^4"))); }) == ErrorKind::SingularQuartic);
  // Node at (0:0:1).
  CHECK(kind_of([] { assert_smooth_quartic(QuarticCurve(Z("z2^2*z0*z1 + z0^4 + z1^4"))); }) ==
        ErrorKind::SingularQuartic);
  // Two conics: singular where they meet.
  CHECK(kind_of([] { assert_smooth_quartic(QuarticCurve(Z("(z0^2 + z1^2 - z2^2)*(z0^2 - 2*z1^2 + 3*z2^2)"))); }) ==
        ErrorKind::SingularQuartic);
  const std::uint32_t primes[] = {5, 11};
  auto w = find_singular_witness(Z("z2^2*z0*z1 + z0^4 + z1^4"), primes);
  REQUIRE(w);
  CHECK(w->point == std::array<std::uint32_t, 3>{0, 0, 1});
  CHECK_FALSE(find_singular_witness(klein_quartic().f(), primes));
}

TEST_CASE("Gauss sections satisfy the Pluecker relation") {
  auto s = build_gauss_sections();
  CHECK(s.p01 == UV("u0*v1 - u1*v0"));
  QPoly rel = s.p01 * UV("v2") - s.p02 * UV("v1") + s.p12 * UV("v0");
  CHECK(rel.is_zero());
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rational> pt(6);
    for (auto& x : pt) x = d(rng);
    auto ev = [&](const QPoly& p) { return p.evaluate(std::span<const Rational>(pt)); };
    CHECK(ev(s.p01) * pt[5] - ev(s.p02) * pt[4] + ev(s.p12) * pt[3] == 0);
  }
}

TEST_CASE("splitting g") {
  const QuarticCurve klein = klein_quartic();
  auto known = split_to_bidegree(klein, UV("u0*u1*v1^2 + u1*u2*v2^2 + u2*u0*v0^2"));
  CHECK(diagonal_restriction(known.g) == klein.f());
  CHECK((diagonal_restriction(known.g_sym) - klein.f() * Rational(2)).is_zero());
  CHECK(known.g_sym == swap_uv(known.g_sym));

  for (const QuarticCurve& c : {klein, fermat_quartic(), QuarticCurve(Z("3*z0^4 - z0*z1*z2^2 + 7/2*z1^3*z2 + z2^4"))}) {
    auto greedy = split_to_bidegree(c);
    CHECK(greedy.g.is_bihomogeneous(3, 2, 2));
    CHECK(diagonal_restriction(greedy.g) == c.f());
    CHECK((diagonal_restriction(greedy.g_sym) - c.f() * Rational(2)).is_zero());
  }
  // Greedy rule on z2*z0^3 gives u0*u2 v0^2 ordering, different from the
  // explicit g but still a valid splitting.
  CHECK(split_to_bidegree(klein).g != known.g);

  CHECK(kind_of([&] { split_to_bidegree(klein, UV("u0^2*v0^2")); }) == ErrorKind::ExplicitGMismatch);
  CHECK(kind_of([&] { split_to_bidegree(klein, UV("u0^3*v0")); }) == ErrorKind::WrongBidegree);
}

TEST_CASE("perturbation") {
  auto s = build_gauss_sections();
  Perturbation p;
  p.lambda = 2;
  p.coeffs[0] = 1;
  p.coeffs[5] = -3;
  QPoly base = UV("u0^2*v0^2");
  CHECK(perturb_gtilde(base, s, p) == base * Rational(2) + s.p01 * s.p01 - s.p12 * s.p12 * Rational(3));
  p.lambda = 0;
  CHECK(kind_of([&] { perturb_gtilde(base, s, p); }) == ErrorKind::ZeroLambda);
  CHECK(Perturbation{}.is_identity());
}

TEST_CASE("equivariant perturbation directions") {
  auto all = [](std::array<bool, 6> a) {
    for (bool b : a)
      if (!b) return false;
    return true;
  };
  CHECK(all(equivariant_products(klein_quartic(), split_to_bidegree(klein_quartic()).g_sym)));
  const QuarticCurve fermat = fermat_quartic();
  auto dirs = equivariant_products(fermat, split_to_bidegree(fermat).g_sym);
  CHECK(dirs == std::array<bool, 6>{true, false, false, true, false, true});
  // Only z0 -> -z0 is a symmetry here: p01*p02 survives, p01*p12 does not.
  const QuarticCurve half(Z("z0^4 + z1^4 + z2^4 + z1*z2^3"));
  CHECK(equivariant_products(half, split_to_bidegree(half).g_sym) ==
        std::array<bool, 6>{true, true, false, true, false, true});
}

TEST_CASE("dimension ladder for the multiplication map") {
  for (const QuarticCurve& c : {klein_quartic(), fermat_quartic()}) {
    MuKernel k = mu_kernel(c);
    CHECK(k.h0_omega2 == 6);
    CHECK(k.source_dim == 21);
    CHECK(k.target_dim == 14);
    CHECK(k.rank == 14);
    CHECK(k.basis.size() == 7);
    for (const auto& form : k.basis) {
      CHECK(form == swap_uv(form));
      CHECK(QuarticNormalForm(c).reduce(diagonal_restriction(form)).is_zero());
    }
  }
}

TEST_CASE("symmetric square coordinates") {
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      auto v = symmetric_square_coordinates(symmetric_square_form(i, j));
      int nonzero = 0;
      for (const auto& x : v) nonzero += sgn(x) != 0;
      CHECK(nonzero == 1);
    }
  CHECK(kind_of([] { symmetric_square_coordinates(UV("u0^2*v0*v1 - u0*u1*v0^2 + u0*u1*v1^2")); }) ==
        ErrorKind::NotSymmetric);
  CHECK(kind_of([] { symmetric_square_coordinates(UV("u0^3*v0")); }) == ErrorKind::WrongBidegree);
}

TEST_CASE("section basis checks") {
  const QuarticCurve klein = klein_quartic();
  SectionBasis s = make_section_basis(klein, UV("u0*u1*v1^2 + u1*u2*v2^2 + u2*u0*v0^2"));
  SectionCheck ok = check_section_basis(klein, s);
  CHECK(ok.product_rank == 6);
  CHECK(ok.total_rank == 7);

  SectionBasis degenerate = s;
  degenerate.g_tilde = s.gauss.p01 * s.gauss.p01;
  CHECK(kind_of([&] { check_section_basis(klein, degenerate); }) == ErrorKind::GTildeInSpan);

  SectionBasis off = s;
  off.g_tilde = UV("u0^2*v0^2");
  CHECK(kind_of([&] { check_section_basis(klein, off); }) == ErrorKind::NotInKernel);
}

TEST_CASE("quartics with split bitangents") {
  SplitQuartic a = split_bitangent_quartic(13, 2);
  SplitQuartic b = split_bitangent_quartic(13, 2);
  CHECK(a.curve.f() == b.curve.f());
  CHECK(a.base_points == b.base_points);
  CHECK(a.curve.f().size() == 15);
  for (const auto& t : a.curve.f().terms()) {
    CHECK(t.coeff.get_den() == 1);
    CHECK(abs(t.coeff) <= 6);
  }
  CHECK(a.base_points.size() == 7);
  CHECK_NOTHROW(assert_smooth_quartic(a.curve));
  CHECK(split_bitangent_quartic(13, 3).curve.f() != a.curve.f());
  CHECK(kind_of([] { split_bitangent_quartic(15, 1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { split_bitangent_quartic(13, 1, 0); }) == ErrorKind::SearchExhausted);
}

}  // TEST_SUITE
