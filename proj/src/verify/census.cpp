#include "nodal/verify/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace nodal {

ProjPoint normalize_point(ProjPoint pt) {
  auto it = std::find_if(pt.begin(), pt.end(), [](const Fq& x) { return !x.is_zero(); });
  if (it == pt.end()) throw Error(ErrorKind::DomainMismatch, "zero vector is not a projective point");
  const Fq inv = it->inverse();
  for (auto& x : pt) x = x * inv;
  return pt;
}

bool point_less(const ProjPoint& a, const ProjPoint& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    auto ia = a[i].field->index(a[i]), ib = b[i].field->index(b[i]);
    if (ia != ib) return ia < ib;
  }
  return a.size() < b.size();
}

std::string to_string(const ProjPoint& pt) {
  std::string s = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ":" : "") + to_string(pt[i]);
  return s + ")";
}

namespace {

// A polynomial restricted to the chart x_0 = ... = x_{c-1} = 0, x_c = 1, with
// exponents kept for the free variables x_{c+1}..x_{n-1}.
struct ChartPoly {
  struct Term {
    std::array<std::uint8_t, kMaxVars> e;
    Fq c;
  };
  std::vector<Term> terms;
  int last_degree = 0;  // degree in x_{n-1}
};

ChartPoly restrict_to_chart(const FqPoly& p, int chart) {
  ChartPoly out;
  const int n = p.vars().size();
  for (const auto& t : p.terms()) {
    bool vanishes = false;
    for (int j = 0; j < chart; ++j) vanishes |= t.mono.exp[j] != 0;
    if (vanishes) continue;
    ChartPoly::Term term{t.mono.exp, t.coeff};
    term.e[chart] = 0;
    out.terms.push_back(term);
    out.last_degree = std::max<int>(out.last_degree, t.mono.exp[n - 1]);
  }
  return out;
}

class ChartScanner {
 public:
  ChartScanner(const std::vector<FqPoly>& polys, const FqField& field, int chart, int n,
               const simd::KernelTable& kernels)
      : field_(field), chart_(chart), n_(n), kernels_(kernels) {
    for (const auto& p : polys) charts_.push_back(restrict_to_chart(p, chart));
  }

  // Scans all points whose first prefix coordinate has index `first` (or the
  // whole chart when there is no prefix).
  void scan_stripe(std::uint64_t first, std::vector<ProjPoint>& out) const {
    const int prefix = n_ - chart_ - 2;  // free variables before the last one
    const std::uint64_t q = field_.order();
    std::vector<std::uint64_t> idx(std::max(prefix, 0), 0);
    if (prefix > 0) idx[0] = first;
    Workspace ws(q);
    while (true) {
      scan_line(idx, ws, out);
      // Odometer over prefix coordinates 1..prefix-1.
      int j = prefix - 1;
      while (j >= 1 && ++idx[j] == q) idx[j--] = 0;
      if (j < 1) break;
    }
  }

  void scan_vertex(std::vector<ProjPoint>& out) const {
    for (const auto& cp : charts_) {
      Fq v = field_.zero();
      for (const auto& t : cp.terms) v += t.c;
      if (!v.is_zero()) return;
    }
    ProjPoint pt(n_, field_.zero());
    pt[chart_] = field_.one();
    out.push_back(pt);
  }

 private:
  struct Workspace {
    explicit Workspace(std::uint64_t q) : xa(q), xb(q), oa(q), ob(q) {}
    std::vector<std::uint32_t> xa, xb, oa, ob, ca, cb;
    std::vector<std::vector<Fq>> powers;
  };

  void scan_line(const std::vector<std::uint64_t>& idx, Workspace& ws, std::vector<ProjPoint>& out) const {
    const std::uint64_t q = field_.order();
    const int prefix = static_cast<int>(idx.size());
    // Powers of the prefix values.
    ws.powers.assign(prefix, {});
    for (int j = 0; j < prefix; ++j) ws.powers[j].push_back(field_.one());
    std::size_t count = q;
    for (std::uint64_t i = 0; i < q; ++i) {
      Fq x = field_.element(i);
      ws.xa[i] = x.a;
      ws.xb[i] = x.b;
    }
    const simd::FqParams params = field_.params();
    for (const auto& cp : charts_) {
      const int deg = cp.last_degree;
      std::vector<Fq> coef(deg + 1, field_.zero());
      for (const auto& t : cp.terms) {
        Fq v = t.c;
        for (int j = 0; j < prefix; ++j) {
          const int e = t.e[chart_ + 1 + j];
          if (e == 0) continue;
          while (static_cast<int>(ws.powers[j].size()) <= e) ws.powers[j].push_back(ws.powers[j].back() * field_.element(idx[j]));
          v = v * ws.powers[j][e];
        }
        coef[t.e[n_ - 1]] += v;
      }
      ws.ca.resize(deg + 1);
      ws.cb.resize(deg + 1);
      bool all_zero = true;
      for (int e = 0; e <= deg; ++e) {
        ws.ca[e] = coef[e].a;
        ws.cb[e] = coef[e].b;
        all_zero &= coef[e].is_zero();
      }
      if (all_zero) continue;
      kernels_.fq_horner(params, ws.ca.data(), ws.cb.data(), deg + 1, ws.xa.data(), ws.xb.data(), ws.oa.data(),
                         ws.ob.data(), count);
      std::size_t kept = 0;
      for (std::size_t i = 0; i < count; ++i)
        if (ws.oa[i] == 0 && ws.ob[i] == 0) {
          ws.xa[kept] = ws.xa[i];
          ws.xb[kept] = ws.xb[i];
          ++kept;
        }
      count = kept;
      if (count == 0) return;
    }
    for (std::size_t i = 0; i < count; ++i) {
      ProjPoint pt(n_, field_.zero());
      pt[chart_] = field_.one();
      for (int j = 0; j < prefix; ++j) pt[chart_ + 1 + j] = field_.element(idx[j]);
      pt[n_ - 1] = field_.make(ws.xa[i], ws.xb[i]);
      out.push_back(std::move(pt));
    }
  }

  const FqField& field_;
  int chart_, n_;
  const simd::KernelTable& kernels_;
  std::vector<ChartPoly> charts_;
};

}  // namespace

std::vector<ProjPoint> projective_common_zeros(const std::vector<FqPoly>& polys, const FqField& field,
                                               const ScanOptions& options) {
  if (polys.empty()) throw Error(ErrorKind::IndexOutOfRange, "no polynomials to scan");
  const VarSet vars = polys[0].vars();
  const int n = vars.size();
  for (const auto& p : polys) {
    if (p.vars() != vars) throw Error(ErrorKind::VariableSetMismatch, "scan polynomials disagree on variables");
    if (!(p.domain().field && *p.domain().field == field)) throw Error(ErrorKind::DomainMismatch, "scan field");
    if (p.total_degree() > 250) throw Error(ErrorKind::ExponentOverflow, "degree too large to scan");
  }
  const std::uint64_t q = field.order();
  // Number of points of P^{n-1}: 1 + q + ... + q^{n-1}.
  std::uint64_t total = 0, term = 1;
  for (int i = 0; i < n && total <= options.budget; ++i, term *= q) total += term;
  if (total > options.budget)
    throw Error(ErrorKind::FieldTooLarge, field.name() + " has more than " + std::to_string(options.budget) +
                                              " points in P^" + std::to_string(n - 1));

  const simd::KernelTable& kernels = options.kernels ? *options.kernels : simd::active_kernels();
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<ProjPoint> result;
  std::mutex mu;
  for (int chart = 0; chart < n; ++chart) {
    ChartScanner scanner(polys, field, chart, n, kernels);
    const int free_vars = n - 1 - chart;
    if (free_vars == 0) {
      scanner.scan_vertex(result);
    } else if (free_vars == 1) {
      scanner.scan_stripe(0, result);
    } else {
      std::atomic<std::uint64_t> next{0};
      auto worker = [&] {
        std::vector<ProjPoint> local;
        for (std::uint64_t s; (s = next.fetch_add(1)) < q;) scanner.scan_stripe(s, local);
        std::lock_guard lock(mu);
        result.insert(result.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
      };
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();
    }
  }
  std::sort(result.begin(), result.end(), point_less);
  return result;
}

std::vector<ProjPoint> scan_singularities(const FqPoly& surface, const FqField& field, const ScanOptions& options) {
  std::vector<FqPoly> partials;
  for (int i = 0; i < surface.vars().size(); ++i) partials.push_back(surface.derivative(i));
  return projective_common_zeros(partials, field, options);
}

namespace {

int rank_fq(std::vector<std::vector<Fq>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t r = rank;
    while (r < rows && m[r][c].is_zero()) ++r;
    if (r == rows) continue;
    std::swap(m[r], m[rank]);
    const Fq inv = m[rank][c].inverse();
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(rank) || m[i][c].is_zero()) continue;
      const Fq factor = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int hessian_rank(const FqPoly& form, const ProjPoint& point) {
  const int n = form.vars().size();
  if (static_cast<int>(point.size()) != n) throw Error(ErrorKind::IndexOutOfRange, "point has wrong length");
  const ProjPoint pt = normalize_point(point);
  const std::span<const Fq> at(pt);
  if (!form.evaluate(at).is_zero()) throw Error(ErrorKind::PointNotSingular, to_string(pt) + " is not on the surface");
  for (int i = 0; i < n; ++i)
    if (!form.derivative(i).evaluate(at).is_zero())
      throw Error(ErrorKind::PointNotSingular, to_string(pt) + " is a smooth point");
  int chart = 0;
  while (pt[chart].is_zero()) ++chart;
  const FqPoly local = form.substitute_value(chart, pt[chart]);
  std::vector<int> free;
  for (int i = 0; i < n; ++i)
    if (i != chart) free.push_back(i);
  std::vector<std::vector<Fq>> h(free.size(), std::vector<Fq>(free.size()));
  for (std::size_t i = 0; i < free.size(); ++i) {
    const FqPoly di = local.derivative(free[i]);
    for (std::size_t j = 0; j < free.size(); ++j) h[i][j] = di.derivative(free[j]).evaluate(at);
  }
  return rank_fq(std::move(h));
}

NodeReport node_census(const QPoly& surface, const FqField& field, const ScanOptions& options) {
  NodeReport report;
  report.field = field.name();
  report.p = field.p();
  report.k = field.k();
  const FqPoly s = reduce_mod_q(surface, field);
  report.points = scan_singularities(s, field, options);
  report.all_ordinary = true;
  for (const auto& pt : report.points) {
    report.hessian_ranks.push_back(hessian_rank(s, pt));
    report.all_ordinary &= report.hessian_ranks.back() == static_cast<int>(pt.size()) - 1;
  }
  return report;
}

}  // namespace nodal
