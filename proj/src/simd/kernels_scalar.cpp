#include "kernels_internal.hpp"

namespace nodal::simd {

void mod_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                     std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t v = dst[i] + static_cast<std::uint64_t>(c) * src[i];
    dst[i] = static_cast<std::uint32_t>(v % p);
  }
}

void fq_horner_scalar(const FqParams& f, const std::uint32_t* coef_a, const std::uint32_t* coef_b, int ncoef,
                      const std::uint32_t* x_a, const std::uint32_t* x_b, std::uint32_t* out_a,
                      std::uint32_t* out_b, std::size_t n) {
  const std::uint64_t p = f.p;
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t acc_a = coef_a[ncoef - 1];
    std::uint64_t acc_b = f.k == 2 ? coef_b[ncoef - 1] : 0;
    const std::uint64_t xa = x_a[j];
    const std::uint64_t xb = f.k == 2 ? x_b[j] : 0;
    for (int i = ncoef - 2; i >= 0; --i) {
      if (f.k == 1) {
        acc_a = (acc_a * xa + coef_a[i]) % p;
      } else {
        std::uint64_t na = (acc_a * xa + (acc_b * xb % p) * f.nonresidue + coef_a[i]) % p;
        std::uint64_t nb = (acc_a * xb + acc_b * xa + coef_b[i]) % p;
        acc_a = na;
        acc_b = nb;
      }
    }
    out_a[j] = static_cast<std::uint32_t>(acc_a);
    if (f.k == 2) out_b[j] = static_cast<std::uint32_t>(acc_b);
  }
}

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &mod_axpy_scalar, &fq_horner_scalar};
  return table;
}

}  // namespace nodal::simd
