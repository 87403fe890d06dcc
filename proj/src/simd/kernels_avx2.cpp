// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace nodal::simd {

namespace {

// High 32 bits of the 32x32 products a[i]*b[i] for all eight lanes.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(even, odd, 0xAA);
}

// x in [0, 2p) -> x mod p.
inline __m256i conditional_sub(__m256i x, __m256i p) { return _mm256_min_epu32(x, _mm256_sub_epi32(x, p)); }

// Barrett reduction of any 32-bit x with m = floor(2^32 / p).
inline __m256i barrett(__m256i x, __m256i m, __m256i p) {
  __m256i q = mulhi_epu32(x, m);
  return conditional_sub(_mm256_sub_epi32(x, _mm256_mullo_epi32(q, p)), p);
}

}  // namespace

void mod_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p) {
  // Shoup multiplication by the fixed multiplier c.
  const std::uint32_t c_shoup = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(c_shoup));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i q = mulhi_epu32(s, vcs);
    __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(s, vc), _mm256_mullo_epi32(q, vp));
    r = conditional_sub(r, vp);
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    d = conditional_sub(_mm256_add_epi32(d, r), vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  if (i < n) mod_axpy_scalar(dst + i, src + i, n - i, c, p);
}

void fq_horner_avx2(const FqParams& f, const std::uint32_t* coef_a, const std::uint32_t* coef_b, int ncoef,
                    const std::uint32_t* x_a, const std::uint32_t* x_b, std::uint32_t* out_a, std::uint32_t* out_b,
                    std::size_t n) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(f.p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>((std::uint64_t{1} << 32) / f.p));
  const __m256i vnr = _mm256_set1_epi32(static_cast<int>(f.nonresidue));
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    __m256i xa = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x_a + j));
    __m256i acc_a = _mm256_set1_epi32(static_cast<int>(coef_a[ncoef - 1]));
    if (f.k == 1) {
      for (int i = ncoef - 2; i >= 0; --i) {
        __m256i prod = _mm256_mullo_epi32(acc_a, xa);
        acc_a = barrett(_mm256_add_epi32(prod, _mm256_set1_epi32(static_cast<int>(coef_a[i]))), vm, vp);
      }
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out_a + j), acc_a);
      continue;
    }
    __m256i xb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x_b + j));
    __m256i acc_b = _mm256_set1_epi32(static_cast<int>(coef_b[ncoef - 1]));
    for (int i = ncoef - 2; i >= 0; --i) {
      __m256i aa = barrett(_mm256_mullo_epi32(acc_a, xa), vm, vp);
      __m256i bb = barrett(_mm256_mullo_epi32(acc_b, xb), vm, vp);
      __m256i nbb = barrett(_mm256_mullo_epi32(bb, vnr), vm, vp);
      __m256i ab = barrett(_mm256_mullo_epi32(acc_a, xb), vm, vp);
      __m256i ba = barrett(_mm256_mullo_epi32(acc_b, xa), vm, vp);
      __m256i na = _mm256_add_epi32(_mm256_add_epi32(aa, nbb), _mm256_set1_epi32(static_cast<int>(coef_a[i])));
      __m256i nb = _mm256_add_epi32(_mm256_add_epi32(ab, ba), _mm256_set1_epi32(static_cast<int>(coef_b[i])));
      acc_a = barrett(na, vm, vp);
      acc_b = barrett(nb, vm, vp);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out_a + j), acc_a);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out_b + j), acc_b);
  }
  if (j < n)
    fq_horner_scalar(f, coef_a, coef_b, ncoef, x_a + j, f.k == 2 ? x_b + j : nullptr, out_a + j,
                     f.k == 2 ? out_b + j : nullptr, n - j);
}

}  // namespace nodal::simd
