#include "nodal/curve/quartic.hpp"

#include <random>

#include "nodal/core/resultant.hpp"

namespace nodal {

QuarticCurve::QuarticCurve(QPoly f) : f_(std::move(f)) {
  if (f_.vars() != VarSet::z()) throw Error(ErrorKind::VariableSetMismatch, "quartic must be in z0, z1, z2");
  if (f_.is_zero()) throw Error(ErrorKind::NotDegree4, "zero polynomial");
  if (!f_.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, to_string(f_));
  if (f_.total_degree() != 4)
    throw Error(ErrorKind::NotDegree4, "degree " + std::to_string(f_.total_degree()));
}

namespace {

QPoly zvar(int i) { return QPoly::variable(VarSet::z(), i); }

}  // namespace

QuarticCurve klein_quartic() {
  return QuarticCurve(zvar(0) * zvar(1).pow(3) + zvar(1) * zvar(2).pow(3) + zvar(2) * zvar(0).pow(3));
}

QuarticCurve fermat_quartic() { return QuarticCurve(zvar(0).pow(4) + zvar(1).pow(4) + zvar(2).pow(4)); }

std::vector<Rational> to_univariate(const QPoly& p, int var) {
  std::vector<Rational> out(std::max(p.degree_in(var), 0) + 1, Rational(0));
  for (const auto& t : p.terms()) {
    for (int i = 0; i < p.vars().size(); ++i)
      if (i != var && t.mono.exp[i] != 0)
        throw Error(ErrorKind::VariableSetMismatch, "polynomial is not univariate");
    out[t.mono.exp[var]] += t.coeff;
  }
  while (out.size() > 1 && sgn(out.back()) == 0) out.pop_back();
  return out;
}

namespace {

void trim(std::vector<Rational>& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

// a mod b, b nonzero and trimmed.
std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return {Rational(0)};
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

namespace {

using Matrix3 = std::array<std::array<long, 3>, 3>;

QPoly change_coordinates(const QPoly& f, const Matrix3& a) {
  std::vector<QPoly> images;
  for (int i = 0; i < 3; ++i) {
    QPoly row(VarSet::z());
    for (int j = 0; j < 3; ++j)
      if (a[i][j] != 0) row += QPoly::variable(VarSet::z(), j) * Rational(a[i][j]);
    images.push_back(row);
  }
  return f.compose(images);
}

long det3(const Matrix3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

// Tries to certify one affine chart; nullopt when the eliminants do not rule
// out a common zero.
std::optional<ChartEliminant> certify_chart(const std::array<QPoly, 3>& partials, int chart) {
  std::vector<QPoly> local;
  for (const auto& d : partials) {
    QPoly g = d.substitute_value(chart, Rational(1));
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      ChartEliminant e;
      e.chart = chart;
      e.eliminated_var = -1;
      e.gcd = g;
      return e;
    }
    local.push_back(g);
  }
  if (local.size() < 2) return std::nullopt;

  std::vector<int> others;
  for (int v = 0; v < 3; ++v)
    if (v != chart) others.push_back(v);

  for (int k = 0; k < 2; ++k) {
    const int elim = others[k], keep = others[1 - k];
    ChartEliminant e;
    e.chart = chart;
    e.eliminated_var = elim;
    std::vector<Rational> g;
    for (std::size_t i = 0; i < local.size(); ++i)
      for (std::size_t j = i + 1; j < local.size(); ++j) {
        QPoly r = sylvester_resultant(local[i], local[j], elim);
        if (r.is_zero()) continue;
        auto uni = to_univariate(r, keep);
        g = g.empty() ? uni : univariate_gcd(g, uni);
        e.resultants.push_back(std::move(r));
      }
    if (g.empty() || g.size() > 1) continue;
    e.gcd = QPoly::constant(VarSet::z(), g[0]);
    return e;
  }
  return std::nullopt;
}

}  // namespace

SmoothnessCertificate assert_smooth_quartic(const QuarticCurve& curve) {
  constexpr int kAttempts = 4;
  std::mt19937 rng(20071);
  std::uniform_int_distribution<long> entry(-3, 3);
  Matrix3 a{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    if (attempt > 0) {
      do {
        for (auto& row : a)
          for (auto& x : row) x = entry(rng);
      } while (det3(a) == 0);
    }
    QPoly g = change_coordinates(curve.f(), a);
    std::array<QPoly, 3> partials{g.derivative(0), g.derivative(1), g.derivative(2)};
    SmoothnessCertificate cert;
    cert.coordinate_change = a;
    bool ok = true;
    for (int chart = 0; chart < 3 && ok; ++chart) {
      auto e = certify_chart(partials, chart);
      if (!e)
        ok = false;
      else
        cert.charts.push_back(std::move(*e));
    }
    if (ok) return cert;
  }
  std::string msg = "partials of " + to_string(curve.f()) + " have a common zero";
  const std::uint32_t primes[] = {101, 103};
  if (auto w = find_singular_witness(curve.f(), primes))
    msg += "; witness (" + std::to_string(w->point[0]) + ":" + std::to_string(w->point[1]) + ":" +
           std::to_string(w->point[2]) + ") over F_" + std::to_string(w->p);
  throw Error(ErrorKind::SingularQuartic, msg);
}

std::optional<SingularWitness> find_singular_witness(const QPoly& f, std::span<const std::uint32_t> primes) {
  for (std::uint32_t p : primes) {
    FpPoly fp;
    try {
      fp = reduce_mod_p(f, p);
    } catch (const Error&) {
      continue;
    }
    std::array<FpPoly, 3> d{fp.derivative(0), fp.derivative(1), fp.derivative(2)};
    // Normalized points: (1:a:b), (0:1:b), (0:0:1).
    auto test = [&](std::uint32_t x0, std::uint32_t x1, std::uint32_t x2) {
      std::array<Fp, 3> pt{Fp{x0, p}, Fp{x1, p}, Fp{x2, p}};
      for (const auto& di : d)
        if (di.evaluate(pt).v != 0) return false;
      return true;
    };
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b)
        if (test(1, a, b)) return SingularWitness{p, {1, a, b}};
    for (std::uint32_t b = 0; b < p; ++b)
      if (test(0, 1, b)) return SingularWitness{p, {0, 1, b}};
    if (test(0, 0, 1)) return SingularWitness{p, {0, 0, 1}};
  }
  return std::nullopt;
}

}  // namespace nodal
