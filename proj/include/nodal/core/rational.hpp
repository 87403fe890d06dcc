#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace nodal {

// Canonical (reduced, positive denominator) after every GMP operation; values
// built from a numerator/denominator pair go through make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

// "-3", "7/2", "0".
std::string to_string(const Rational& r);

// Parses "[-]INT" or "[-]INT/INT"; returns nullopt on malformed input or zero
// denominator.
std::optional<Rational> parse_rational(const std::string& text);

// Smallest n/d with n ≡ a·d (mod m), |n|, d <= sqrt(m/2). Nullopt if none.
std::optional<Rational> rational_reconstruct(const BigInt& a, const BigInt& m);

// x mod m in [0, m) for a word-sized modulus.
std::uint32_t mod_u32(const BigInt& x, std::uint32_t m);

}  // namespace nodal
