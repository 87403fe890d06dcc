#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nodal/core/polynomial.hpp"
#include "nodal/simd/kernels.hpp"

namespace nodal {

class FqField;

// Element a + b t of F_p[t]/(t^2 - n). For k == 1, b is always 0.
struct Fq {
  std::uint32_t a = 0, b = 0;
  const FqField* field = nullptr;

  bool is_zero() const { return a == 0 && b == 0; }
  Fq inverse() const;  // throws DivisionNotExact on zero
  Fq pow(std::uint64_t e) const;
};

// F_{p^k}, k in {1, 2}, p an odd prime not dividing 6 and below 2^16.
class FqField {
 public:
  // Throws NotPrime, BadModulus or FieldTooLarge.
  FqField(std::uint32_t p, int k);

  std::uint32_t p() const { return p_; }
  int k() const { return k_; }
  std::uint64_t order() const { return k_ == 1 ? p_ : std::uint64_t(p_) * p_; }
  std::uint32_t nonresidue() const { return n_; }
  simd::FqParams params() const { return {p_, n_, k_}; }
  std::string name() const;  // "F_29", "F_13^2"

  Fq zero() const { return {0, 0, this}; }
  Fq one() const { return {1, 0, this}; }
  Fq from_int(long long v) const;
  // Throws BadReductionPrime when the denominator vanishes mod p.
  Fq from_rational(const Rational& r) const;
  Fq make(std::uint32_t a, std::uint32_t b) const { return {a % p_, k_ == 1 ? 0 : b % p_, this}; }

  // Enumeration order: index = a + p * b.
  Fq element(std::uint64_t index) const { return make(static_cast<std::uint32_t>(index % p_), static_cast<std::uint32_t>(index / p_)); }
  std::uint64_t index(const Fq& x) const { return x.a + std::uint64_t(p_) * x.b; }

  // First element in index order whose (q-1)/7 power is not 1, raised to
  // that power; nullopt unless q = 1 mod 7.
  std::optional<Fq> zeta7() const;

  friend bool operator==(const FqField& x, const FqField& y) { return x.p_ == y.p_ && x.k_ == y.k_; }

 private:
  std::uint32_t p_;
  int k_;
  std::uint32_t n_;
};

// Parses "p" or "p^k".
struct FieldSpec {
  std::uint32_t p = 0;
  int k = 1;
};
FieldSpec parse_field_spec(const std::string& text);

inline bool operator==(const Fq& x, const Fq& y) { return x.a == y.a && x.b == y.b; }
inline bool operator!=(const Fq& x, const Fq& y) { return !(x == y); }
inline Fq operator+(const Fq& x, const Fq& y) {
  const std::uint32_t p = x.field->p();
  return {add_mod(x.a, y.a, p), add_mod(x.b, y.b, p), x.field};
}
inline Fq operator-(const Fq& x, const Fq& y) {
  const std::uint32_t p = x.field->p();
  return {sub_mod(x.a, y.a, p), sub_mod(x.b, y.b, p), x.field};
}
inline Fq operator-(const Fq& x) {
  const std::uint32_t p = x.field->p();
  return {x.a ? p - x.a : 0, x.b ? p - x.b : 0, x.field};
}
inline Fq operator*(const Fq& x, const Fq& y) {
  const std::uint64_t p = x.field->p();
  if (x.field->k() == 1) return {static_cast<std::uint32_t>(std::uint64_t(x.a) * y.a % p), 0, x.field};
  const std::uint64_t bb = std::uint64_t(x.b) * y.b % p;
  const std::uint64_t a = (std::uint64_t(x.a) * y.a + bb * x.field->nonresidue()) % p;
  const std::uint64_t b = (std::uint64_t(x.a) * y.b + std::uint64_t(x.b) * y.a) % p;
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), x.field};
}
inline Fq& operator+=(Fq& x, const Fq& y) { return x = x + y; }
inline Fq& operator-=(Fq& x, const Fq& y) { return x = x - y; }
inline Fq& operator*=(Fq& x, const Fq& y) { return x = x * y; }

std::string to_string(const Fq& x);  // "a" or "a+b*t"

template <>
struct CoeffTraits<Fq> {
  struct Domain {
    const FqField* field = nullptr;
    friend bool operator==(const Domain& x, const Domain& y) {
      return x.field == y.field || (x.field && y.field && *x.field == *y.field);
    }
  };
  static Domain domain_of(const Fq& c) { return {c.field}; }
  static Fq from_int(const Domain& d, long v) { return d.field->from_int(v); }
  static bool is_zero(const Fq& c) { return c.is_zero(); }
  static bool is_negative(const Fq&) { return false; }
  static std::string to_string(const Fq& c) { return nodal::to_string(c); }
};

using FqPoly = Polynomial<Fq>;

// Coefficient-wise reduction; throws BadReductionPrime.
FqPoly reduce_mod_q(const QPoly& p, const FqField& field);

}  // namespace nodal
