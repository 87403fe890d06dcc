#include <cstdlib>
#include <cstring>

#include "kernels_internal.hpp"

namespace nodal::simd {

const KernelTable* avx2_kernels() {
#if defined(NODAL_HAVE_AVX2)
  static const KernelTable table{"avx2", &mod_axpy_avx2, &fq_horner_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    const char* force = std::getenv("NODAL_SIMD");
    if (force && std::strcmp(force, "scalar") == 0) return &scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return t;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace nodal::simd
