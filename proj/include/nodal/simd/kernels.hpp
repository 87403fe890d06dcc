#pragma once

// Data-parallel inner loops with a portable scalar reference and optional
// vector variants. The active table is chosen once at startup from CPU
// features; NODAL_SIMD=scalar forces the reference path.

#include <cstddef>
#include <cstdint>

namespace nodal::simd {

// dst[i] = (dst[i] + c * src[i]) mod p. Requires p < 2^31 and all inputs
// reduced.
using ModAxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                           std::uint32_t p);

// Arithmetic of F_{p^k}, k in {1, 2}, as F_p[t]/(t^2 - nonresidue). Requires
// p < 2^16. Elements are split into (a, b) planes; for k == 1 the b plane is
// ignored and may be null.
struct FqParams {
  std::uint32_t p;
  std::uint32_t nonresidue;
  int k;
};

// out[j] = sum_i coef[i] * x[j]^i for j < n (coefficients lowest degree
// first, ncoef >= 1).
using FqHornerFn = void (*)(const FqParams& field, const std::uint32_t* coef_a, const std::uint32_t* coef_b,
                            int ncoef, const std::uint32_t* x_a, const std::uint32_t* x_b, std::uint32_t* out_a,
                            std::uint32_t* out_b, std::size_t n);

struct KernelTable {
  const char* name;
  ModAxpyFn mod_axpy;
  FqHornerFn fq_horner;
};

const KernelTable& scalar_kernels();
// Null when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels();
const KernelTable& active_kernels();

}  // namespace nodal::simd
