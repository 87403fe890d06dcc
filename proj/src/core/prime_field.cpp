#include "nodal/core/prime_field.hpp"

#include "nodal/core/error.hpp"

namespace nodal {

namespace {

std::uint64_t mul_mod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod64(r, a, m);
    a = mul_mod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> elimination_primes(std::size_t count, std::uint32_t below) {
  std::vector<std::uint32_t> out;
  std::uint32_t c = below - 1;
  if ((c & 1) == 0) --c;
  for (; out.size() < count && c > 5; c -= 2)
    if (is_prime(c)) out.push_back(c);
  return out;
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  return static_cast<std::uint32_t>(pow_mod64(a, e, p));
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorKind::DivisionNotExact, "inverse of zero modulo " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

std::uint32_t reduce_rational(const Rational& r, std::uint32_t p) {
  std::uint32_t den = mod_u32(r.get_den(), p);
  if (den == 0)
    throw Error(ErrorKind::BadModulus, "denominator of " + to_string(r) + " vanishes modulo " + std::to_string(p));
  return mul_mod(mod_u32(r.get_num(), p), inv_mod(den, p), p);
}

PrimeField::PrimeField(std::uint32_t p, bool require_coprime_6) : p_(p) {
  if (require_coprime_6 && (p == 2 || p == 3))
    throw Error(ErrorKind::BadModulus, "modulus " + std::to_string(p) + " divides 6");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

Fp PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r), p_};
}

}  // namespace nodal
