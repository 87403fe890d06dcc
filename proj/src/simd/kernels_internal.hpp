#pragma once

#include "nodal/simd/kernels.hpp"

namespace nodal::simd {

void mod_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                     std::uint32_t p);
void fq_horner_scalar(const FqParams& f, const std::uint32_t* coef_a, const std::uint32_t* coef_b, int ncoef,
                      const std::uint32_t* x_a, const std::uint32_t* x_b, std::uint32_t* out_a,
                      std::uint32_t* out_b, std::size_t n);

#if defined(NODAL_HAVE_AVX2)
void mod_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p);
void fq_horner_avx2(const FqParams& f, const std::uint32_t* coef_a, const std::uint32_t* coef_b, int ncoef,
                    const std::uint32_t* x_a, const std::uint32_t* x_b, std::uint32_t* out_a, std::uint32_t* out_b,
                    std::size_t n);
#endif

}  // namespace nodal::simd
