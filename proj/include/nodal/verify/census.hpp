#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nodal/verify/fq.hpp"

namespace nodal {

// Projective point with its first nonzero coordinate equal to 1.
using ProjPoint = std::vector<Fq>;

ProjPoint normalize_point(ProjPoint pt);  // throws on the zero vector
bool point_less(const ProjPoint& a, const ProjPoint& b);
std::string to_string(const ProjPoint& pt);

struct ScanOptions {
  std::uint64_t budget = 100000000;  // points of P^{n-1}(F_q)
  unsigned threads = 0;              // 0: hardware concurrency
  const simd::KernelTable* kernels = nullptr;  // null: active table
};

// All points of P^{n-1}(F_q) where every polynomial vanishes, sorted by
// point_less. The polynomials share one variable set of size n. Throws
// FieldTooLarge when the point count exceeds the budget.
std::vector<ProjPoint> projective_common_zeros(const std::vector<FqPoly>& polys, const FqField& field,
                                               const ScanOptions& options = {});

// Points where all partial derivatives vanish (and hence, for p not
// dividing the degree, the form itself).
std::vector<ProjPoint> scan_singularities(const FqPoly& surface, const FqField& field, const ScanOptions& options = {});

// Rank of the Hessian of the dehomogenized form at a singular point, in the
// chart of its first nonzero coordinate. Throws PointNotSingular.
int hessian_rank(const FqPoly& form, const ProjPoint& pt);

struct NodeReport {
  std::string field;
  std::uint32_t p = 0;
  int k = 1;
  std::vector<ProjPoint> points;
  std::vector<int> hessian_ranks;
  bool all_ordinary = false;
};

NodeReport node_census(const QPoly& surface, const FqField& field, const ScanOptions& options = {});

}  // namespace nodal
