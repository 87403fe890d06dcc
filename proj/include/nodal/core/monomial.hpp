#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nodal {

inline constexpr int kMaxVars = 8;

// Ordered variable names. Instances are interned, so copies are a pointer and
// equality is identity.
class VarSet {
 public:
  VarSet();  // the empty set

  static VarSet of(const std::vector<std::string>& names);
  static VarSet indexed(std::string_view prefix, int count);  // prefix0..prefix{count-1}
  static VarSet z() { return indexed("z", 3); }
  static VarSet x() { return indexed("x", 4); }
  static VarSet y() { return indexed("y", 4); }
  static VarSet uv();  // u0,u1,u2,v0,v1,v2

  int size() const;
  const std::string& name(int i) const;
  std::optional<int> index_of(std::string_view name) const;
  const std::vector<std::string>& names() const;

  friend bool operator==(VarSet a, VarSet b) { return a.data_ == b.data_; }
  friend bool operator!=(VarSet a, VarSet b) { return a.data_ != b.data_; }

 private:
  explicit VarSet(const std::vector<std::string>* data) : data_(data) {}
  const std::vector<std::string>* data_;
};

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  Monomial() = default;
  Monomial(std::initializer_list<int> exps);

  int degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  int operator[](int i) const { return exp[i]; }

  // Throws ExponentOverflow past 255.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }
  // Requires divides(o) == true for `o / *this`.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(exp[i] - o.exp[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exp != b.exp; }
};

// Graded lexicographic: higher total degree first, ties broken by the first
// differing exponent in declared variable order.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  return false;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 0;
    for (auto e : m.exp) h = h * 131 + e;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// All monomials of total degree `degree` in the first `nvars` variables,
// grlex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int degree, int offset = 0);

std::string format_monomial(const Monomial& m, VarSet vars);

}  // namespace nodal
