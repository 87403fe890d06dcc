#include <random>

#include "doctest.h"
#include "nodal/core/linear_algebra.hpp"
#include "nodal/core/prime_field.hpp"
#include "nodal/core/resultant.hpp"
#include "support.hpp"

using namespace nodal;
using namespace nodal::testing;

TEST_SUITE("core") {

TEST_CASE("rationals stay canonical") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(parse_rational("-14/4") == make_rational(-7, 2));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("1/"));
  CHECK_FALSE(parse_rational("a"));
}

TEST_CASE("rational reconstruction recovers small fractions") {
  const BigInt m = BigInt(2147483647) * BigInt(2147483629);
  for (auto [n, d] : std::vector<std::pair<long, long>>{{3, 7}, {-22, 5}, {0, 1}, {123456, 789}}) {
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), BigInt(d).get_mpz_t(), m.get_mpz_t());
    BigInt a = BigInt(n) * inv % m;
    if (a < 0) a += m;
    auto r = rational_reconstruct(a, m);
    REQUIRE(r);
    CHECK(*r == make_rational(n, d));
  }
}

TEST_CASE("prime field helpers") {
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ull));
  CHECK(inv_mod(3, 7) == 5);
  CHECK(pow_mod(2, 10, 1000003) == 1024);
  CHECK(reduce_rational(make_rational(1, 2), 7) == 4);
  CHECK_THROWS_AS(reduce_rational(make_rational(1, 7), 7), Error);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(3), Error);
  auto primes = elimination_primes(3);
  REQUIRE(primes.size() == 3);
  CHECK(primes[0] > primes[1]);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(1);
  const VarSet v = VarSet::x();
  for (int trial = 0; trial < 60; ++trial) {
    QPoly a = random_poly(rng, v, 5, 4), b = random_poly(rng, v, 5, 4), c = random_poly(rng, v, 4, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
  }
}

TEST_CASE("grlex order and canonical printing") {
  QPoly p = X("x3 + x0*x1 + x0^2 + 1 + x1^2");
  CHECK(to_string(p) == "x0^2 + x0*x1 + x1^2 + x3 + 1");
  CHECK(to_string(X("-x0 + 1/2*x1 - 2")) == "-x0 + 1/2*x1 - 2");
  CHECK(to_string(X("0*x0")) == "0");
  CHECK(grlex_greater(Monomial{0, 3}, Monomial{2}));
  CHECK(grlex_greater(Monomial{1, 1}, Monomial{0, 2}));
}

TEST_CASE("print then parse is the identity on 1000 random polynomials") {
  std::mt19937_64 rng(7);
  int mismatches = 0;
  for (VarSet v : {VarSet::x(), VarSet::y(), VarSet::z(), VarSet::uv()}) {
    for (int trial = 0; trial < 250; ++trial) {
      QPoly p = random_poly(rng, v, 6, 6, 40, 9);
      if (parse_poly(to_string(p), v) != p) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("parser errors") {
  auto kind = [](const char* text) {
    try {
      parse_poly(text, VarSet::x());
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  CHECK(kind("x0+") == ErrorKind::SyntaxError);
  CHECK(kind("(x0+x1") == ErrorKind::SyntaxError);
  CHECK(kind("x0^") == ErrorKind::SyntaxError);
  CHECK(kind("x0^2^3") == ErrorKind::SyntaxError);
  CHECK(kind("2x0") == ErrorKind::SyntaxError);
  CHECK(kind("1/0") == ErrorKind::SyntaxError);
  CHECK(kind("y0") == ErrorKind::UnknownVariable);
  CHECK(kind("x0^256") == ErrorKind::ExponentOverflow);
  try {
    parse_poly("x0 + * x1", VarSet::x());
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
  CHECK(to_string(X("(x0 - x1)^2")) == "x0^2 - 2*x0*x1 + x1^2");
  CHECK(to_string(X("--x0")) == "x0");
}

TEST_CASE("derivative, evaluation and composition") {
  QPoly p = X("x0^3*x1 - 2*x2^2 + 5");
  CHECK(p.derivative(0) == X("3*x0^2*x1"));
  std::vector<Rational> pt{2, 3, 1, 0};
  CHECK(p.evaluate(std::span<const Rational>(pt)) == 27);
  QPoly q = p.compose({X("x1"), X("x0"), X("x2 + x3"), X("x3")});
  CHECK(q == X("x1^3*x0 - 2*(x2 + x3)^2 + 5"));
}

TEST_CASE("division by a list") {
  QPoly f = X("x0^2 + x1^2");
  QPoly a = X("x0^3 + x0*x1 + 1");
  auto [q, r] = divide_by(a, std::vector<QPoly>{f}, rational_inverse);
  CHECK(q[0] * f + r == a);
  for (const auto& t : r.terms()) CHECK_FALSE(f.leading_term().mono.divides(t.mono));
  CHECK_THROWS_AS(exact_divide(a, f, rational_inverse), Error);
  CHECK(exact_divide(f * a, f, rational_inverse) == a);
}

TEST_CASE("resultant examples") {
  const VarSet v = VarSet::x();
  // Res_x0(x0 - a, x0 - b) = a - b with a = x1, b = x2.
  CHECK(sylvester_resultant(X("x0 - x1"), X("x0 - x2"), 0) == X("x1 - x2"));
  // Res(x^2 - c, 2x) = -4c in the row convention used here.
  CHECK(sylvester_resultant(X("x0^2 - x1"), X("2*x0"), 0) == X("-4*x1"));
  // Cubic in x0 with p = x1, q = x2.
  CHECK(sylvester_resultant(X("x0^3 + x1*x0 + x2"), X("3*x0^2 + x1"), 0) == X("4*x1^3 + 27*x2^2"));
  // Common root gives zero.
  CHECK(sylvester_resultant(X("(x0 - 1)*(x0 - 2)"), X("(x0 - 2)*(x0 + 5)"), 0).is_zero());
  // Degree zero in the variable.
  CHECK(sylvester_resultant(X("x1 + 1"), X("x0^3 + 1"), 0) == X("(x1 + 1)^3"));
  CHECK_THROWS_AS(sylvester_resultant(QPoly(v), X("x0"), 0), Error);
}

TEST_CASE("resultant multiplicativity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    QPoly a = random_poly(rng, VarSet::x(), 3, 2, 5, 1) + X("x0^2");
    QPoly b = random_poly(rng, VarSet::x(), 3, 2, 5, 1) + X("x0");
    QPoly c = random_poly(rng, VarSet::x(), 3, 2, 5, 1) + X("x0^2");
    CHECK(sylvester_resultant(a * b, c, 0) == sylvester_resultant(a, c, 0) * sylvester_resultant(b, c, 0));
  }
}

TEST_CASE("determinant and inverse") {
  RationalMatrix m(3, 3);
  int vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  CHECK(determinant(m) == 18);
  RationalMatrix prod = multiply(m, inverse(m));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod(i, j) == (i == j ? 1 : 0));
  RationalMatrix s(2, 2, Rational(1));
  CHECK_THROWS_AS(inverse(s), Error);
}

TEST_CASE("multi-modular nullspace agrees with fraction Gauss-Jordan") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(2, 9), val(-20, 20);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    RationalMatrix m(rows, cols);
    const int rank = std::min(rows, cols) > 1 ? std::uniform_int_distribution<int>(1, std::min(rows, cols) - 1)(rng) : 1;
    // Product of random rows x rank and rank x cols, so the rank is bounded.
    RationalMatrix a(rows, rank), b(rank, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rank; ++j) a(i, j) = make_rational(val(rng), std::uniform_int_distribution<int>(1, 5)(rng));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < cols; ++j) b(i, j) = val(rng);
    m = multiply(a, b);
    auto exact = nullspace_exact(m, 2);
    auto gauss = nullspace_gauss(m);
    REQUIRE(exact.basis.size() == gauss.size());
    for (std::size_t k = 0; k < gauss.size(); ++k) CHECK(exact.basis[k] == gauss[k]);
    for (const auto& v : exact.basis) {
      for (auto x : multiply(m, v)) CHECK(sgn(x) == 0);
    }
    CHECK(rank_mod_p(reduce_matrix(m, 1000003), 1000003) == cols - gauss.size());
    CHECK(rank_gauss(m) == cols - gauss.size());
  }
}

TEST_CASE("nullspace with large coefficients needs several primes") {
  RationalMatrix m(1, 2);
  m(0, 0) = BigInt("123456789012345678901234567890");
  m(0, 1) = make_rational(BigInt("98765432109876543210"), BigInt("7"));
  auto ns = nullspace_exact(m);
  REQUIRE(ns.basis.size() == 1);
  CHECK(m(0, 0) * ns.basis[0][0] + m(0, 1) * ns.basis[0][1] == 0);
  CHECK(ns.primes_used >= 2);
}

}  // TEST_SUITE
