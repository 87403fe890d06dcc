#pragma once

#include <cstdint>
#include <vector>

#include "nodal/core/rational.hpp"

namespace nodal {

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  T* row(std::size_t r) { return data_.data() + r * cols_; }
  const T* row(std::size_t r) const { return data_.data() + r * cols_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<Rational>;
using ModMatrix = DenseMatrix<std::uint32_t>;

// Reduced row echelon form modulo p, in place. Returns pivot columns.
std::vector<std::size_t> rref_mod_p(ModMatrix& m, std::uint32_t p);
std::size_t rank_mod_p(ModMatrix m, std::uint32_t p);

// Reduction of a rational matrix; throws BadModulus on a vanishing
// denominator.
ModMatrix reduce_matrix(const RationalMatrix& m, std::uint32_t p);

// Standard nullspace basis from an RREF pivot structure: one vector per free
// column f, with 1 at f and -R[i][f] at pivot i.
std::vector<std::vector<std::uint32_t>> nullspace_mod_p(const ModMatrix& m, std::uint32_t p);

struct NullspaceResult {
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivots;
  std::size_t primes_used = 0;
};

// Multi-modular exact nullspace: eliminates modulo word-sized primes,
// reconstructs the reduced-echelon basis by CRT and rational reconstruction,
// then verifies M v = 0 over the rationals. The returned basis equals the
// reduced-echelon basis over Q. Primes are processed `threads` at a time.
NullspaceResult nullspace_exact(const RationalMatrix& m, unsigned threads = 1);

// Fraction-based Gauss-Jordan over Q; independent of the modular path.
std::vector<std::vector<Rational>> nullspace_gauss(const RationalMatrix& m);
std::size_t rank_gauss(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

RationalMatrix identity_matrix(std::size_t n);
std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& v);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix inverse(const RationalMatrix& m);  // throws SingularMatrix

}  // namespace nodal
