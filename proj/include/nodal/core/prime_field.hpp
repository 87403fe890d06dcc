#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nodal/core/rational.hpp"

namespace nodal {

bool is_prime(std::uint64_t n);

// Odd primes below 2^31, largest first. Used for modular elimination.
std::vector<std::uint32_t> elimination_primes(std::size_t count, std::uint32_t below = 2147483648u);

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : p - (b - a);
}
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
// Requires a != 0 mod p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

// Rational -> residue; throws BadModulus when the denominator vanishes mod p.
std::uint32_t reduce_rational(const Rational& r, std::uint32_t p);

// Element of F_p carrying its modulus. The modulus is checked at context
// creation (PrimeField), not per element.
struct Fp {
  std::uint32_t v = 0;
  std::uint32_t p = 0;

  friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v && a.p == b.p; }
  friend Fp operator+(Fp a, Fp b) { return {add_mod(a.v, b.v, a.p), a.p}; }
  friend Fp operator-(Fp a, Fp b) { return {sub_mod(a.v, b.v, a.p), a.p}; }
  friend Fp operator*(Fp a, Fp b) { return {mul_mod(a.v, b.v, a.p), a.p}; }
  friend Fp operator-(Fp a) { return {a.v == 0 ? 0 : a.p - a.v, a.p}; }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp inverse() const { return {inv_mod(v, p), p}; }
};

class PrimeField {
 public:
  // Throws NotPrime for composite or even moduli; with require_coprime_6 the
  // moduli 2 and 3 are rejected with BadModulus.
  explicit PrimeField(std::uint32_t p, bool require_coprime_6 = true);

  std::uint32_t modulus() const { return p_; }
  Fp zero() const { return {0, p_}; }
  Fp one() const { return {1 % p_, p_}; }
  Fp from_int(long long v) const;
  Fp from_rational(const Rational& r) const { return {reduce_rational(r, p_), p_}; }

 private:
  std::uint32_t p_;
};

}  // namespace nodal
