#include "nodal/core/linear_algebra.hpp"

#include <algorithm>
#include <future>
#include <optional>

#include "nodal/core/error.hpp"
#include "nodal/core/prime_field.hpp"
#include "nodal/simd/kernels.hpp"

namespace nodal {

std::vector<std::size_t> rref_mod_p(ModMatrix& m, std::uint32_t p) {
  const auto& kernels = simd::active_kernels();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) std::swap_ranges(m.row(piv), m.row(piv) + cols, m.row(rank));
    std::uint32_t* prow = m.row(rank);
    std::uint32_t inv = inv_mod(prow[col], p);
    for (std::size_t c = col; c < cols; ++c) prow[c] = mul_mod(prow[c], inv, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::uint32_t v = m(r, col);
      if (v == 0) continue;
      kernels.mod_axpy(m.row(r) + col, prow + col, cols - col, p - v, p);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

std::size_t rank_mod_p(ModMatrix m, std::uint32_t p) { return rref_mod_p(m, p).size(); }

ModMatrix reduce_matrix(const RationalMatrix& m, std::uint32_t p) {
  ModMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = reduce_rational(m(r, c), p);
  return out;
}

namespace {

std::vector<std::size_t> free_columns(std::size_t cols, const std::vector<std::size_t>& pivots) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (k < pivots.size() && pivots[k] == c)
      ++k;
    else
      out.push_back(c);
  }
  return out;
}

struct ModularImage {
  std::uint32_t p = 0;
  bool usable = false;
  std::vector<std::size_t> pivots;
  // entries[f][i] = -R[i][free_f] mod p
  std::vector<std::vector<std::uint32_t>> entries;
};

ModularImage modular_image(const RationalMatrix& m, std::uint32_t p) {
  ModularImage img;
  img.p = p;
  ModMatrix red;
  try {
    red = reduce_matrix(m, p);
  } catch (const Error&) {
    return img;
  }
  img.pivots = rref_mod_p(red, p);
  img.usable = true;
  for (std::size_t f : free_columns(m.cols(), img.pivots)) {
    std::vector<std::uint32_t> col(img.pivots.size());
    for (std::size_t i = 0; i < img.pivots.size(); ++i) col[i] = red(i, f) == 0 ? 0 : p - red(i, f);
    img.entries.push_back(std::move(col));
  }
  return img;
}

// True when pivot set a is strictly better than b: larger rank, or same rank
// with elementwise-earlier pivots.
bool better_pivots(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

bool verify_kernel(const RationalMatrix& m, const std::vector<Rational>& v) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(v[c]) != 0 && sgn(m(r, c)) != 0) s += m(r, c) * v[c];
    if (sgn(s) != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> nullspace_mod_p(const ModMatrix& m, std::uint32_t p) {
  ModMatrix red = m;
  auto pivots = rref_mod_p(red, p);
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f : free_columns(m.cols(), pivots)) {
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = red(i, f) == 0 ? 0 : p - red(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

NullspaceResult nullspace_exact(const RationalMatrix& m, unsigned threads) {
  constexpr std::size_t kMaxPrimes = 2000;
  threads = std::max(1u, threads);
  const auto primes = elimination_primes(kMaxPrimes);

  std::vector<std::size_t> best_pivots;
  bool have_best = false;
  std::vector<std::vector<BigInt>> crt;  // [free][pivot row]
  BigInt modulus = 1;
  std::optional<std::vector<std::vector<Rational>>> previous;
  std::size_t used = 0;

  for (std::size_t next = 0; next < primes.size();) {
    std::vector<std::future<ModularImage>> batch;
    for (unsigned t = 0; t < threads && next < primes.size(); ++t, ++next) {
      std::uint32_t p = primes[next];
      batch.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                 [&m, p] { return modular_image(m, p); }));
    }
    for (auto& fut : batch) {
      ModularImage img = fut.get();
      if (!img.usable) continue;
      ++used;
      if (!have_best || better_pivots(img.pivots, best_pivots)) {
        best_pivots = img.pivots;
        have_best = true;
        crt.assign(img.entries.size(), std::vector<BigInt>(best_pivots.size()));
        for (std::size_t f = 0; f < img.entries.size(); ++f)
          for (std::size_t i = 0; i < best_pivots.size(); ++i) crt[f][i] = img.entries[f][i];
        modulus = img.p;
        previous.reset();
      } else if (img.pivots == best_pivots) {
        // X' = X + M * ((r - X) * M^{-1} mod p)
        std::uint32_t minv = inv_mod(mod_u32(modulus, img.p), img.p);
        for (std::size_t f = 0; f < crt.size(); ++f)
          for (std::size_t i = 0; i < best_pivots.size(); ++i) {
            std::uint32_t x = mod_u32(crt[f][i], img.p);
            std::uint32_t k = mul_mod(sub_mod(img.entries[f][i], x, img.p), minv, img.p);
            crt[f][i] += modulus * k;
          }
        modulus *= img.p;
      } else {
        continue;  // unlucky prime
      }

      const auto frees = free_columns(m.cols(), best_pivots);
      if (frees.empty()) return {{}, best_pivots, used};

      std::vector<std::vector<Rational>> candidate;
      bool ok = true;
      for (std::size_t f = 0; f < frees.size() && ok; ++f) {
        std::vector<Rational> v(m.cols(), 0);
        v[frees[f]] = 1;
        for (std::size_t i = 0; i < best_pivots.size(); ++i) {
          auto q = rational_reconstruct(crt[f][i], modulus);
          if (!q) {
            ok = false;
            break;
          }
          v[best_pivots[i]] = *q;
        }
        candidate.push_back(std::move(v));
      }
      if (!ok) {
        previous.reset();
        continue;
      }
      bool stable = previous && *previous == candidate;
      previous = candidate;
      if (!stable) continue;
      bool verified = std::all_of(candidate.begin(), candidate.end(),
                                  [&m](const std::vector<Rational>& v) { return verify_kernel(m, v); });
      if (verified) return {std::move(candidate), best_pivots, used};
    }
  }
  throw Error(ErrorKind::ReconstructionFailed, "multi-modular nullspace did not stabilize");
}

namespace {

// Gauss-Jordan over Q in place; returns pivot columns.
std::vector<std::size_t> rref_rational(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < a.rows() && sgn(a(piv, col)) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != rank)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(rank, c));
    Rational inv = 1 / a(rank, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(rank, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (sgn(a(rank, c)) != 0) a(r, c) -= f * a(rank, c);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace_gauss(const RationalMatrix& m) {
  RationalMatrix a = m;
  auto pivots = rref_rational(a);
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f : free_columns(m.cols(), pivots)) {
    std::vector<Rational> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_gauss(const RationalMatrix& m) {
  RationalMatrix a = m;
  return rref_rational(a).size();
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::IndexOutOfRange, "determinant of non-square matrix");
  RationalMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a(piv, col)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix id(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows(), b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::SingularMatrix, "non-square matrix");
  RationalMatrix aug(n, 2 * n, Rational(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = rref_rational(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace nodal
