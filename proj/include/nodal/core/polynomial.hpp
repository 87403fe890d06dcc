#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nodal/core/error.hpp"
#include "nodal/core/monomial.hpp"
#include "nodal/core/prime_field.hpp"
#include "nodal/core/rational.hpp"

namespace nodal {

// Coefficient domains plug into Polynomial through this traits class. A
// domain value identifies the concrete ring (e.g. the modulus); binary
// operations on polynomials require equal domains.
template <class K>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  struct Domain {
    friend bool operator==(const Domain&, const Domain&) { return true; }
  };
  static Domain domain_of(const Rational&) { return {}; }
  static Rational from_int(const Domain&, long v) { return Rational(v); }
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static bool is_negative(const Rational& c) { return sgn(c) < 0; }
  static std::string to_string(const Rational& c) { return nodal::to_string(c); }
};

template <>
struct CoeffTraits<Fp> {
  struct Domain {
    std::uint32_t p = 0;
    friend bool operator==(const Domain& a, const Domain& b) { return a.p == b.p; }
  };
  static Domain domain_of(const Fp& c) { return {c.p}; }
  static Fp from_int(const Domain& d, long v) {
    long r = v % static_cast<long>(d.p);
    if (r < 0) r += d.p;
    return {static_cast<std::uint32_t>(r), d.p};
  }
  static bool is_zero(const Fp& c) { return c.v == 0; }
  static bool is_negative(const Fp&) { return false; }
  static std::string to_string(const Fp& c) { return std::to_string(c.v); }
};

// Sparse multivariate polynomial. Terms are kept grlex-descending with no
// zero coefficients, so equal polynomials have identical term vectors.
template <class K>
class Polynomial {
 public:
  using Traits = CoeffTraits<K>;
  using Domain = typename Traits::Domain;
  using Coeff = K;

  struct Term {
    Monomial mono;
    K coeff;
  };

  Polynomial() = default;
  explicit Polynomial(VarSet vars, Domain domain = Domain{}) : vars_(vars), domain_(domain) {}

  static Polynomial constant(VarSet vars, Domain domain, const K& c) {
    Polynomial p(vars, domain);
    if (!Traits::is_zero(c)) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Polynomial constant(VarSet vars, const K& c) { return constant(vars, Traits::domain_of(c), c); }
  static Polynomial one(VarSet vars, Domain domain = Domain{}) {
    return constant(vars, domain, Traits::from_int(domain, 1));
  }
  static Polynomial variable(VarSet vars, int index, Domain domain = Domain{}) {
    check_index(vars, index);
    Monomial m;
    m.exp[index] = 1;
    return term(vars, domain, m, Traits::from_int(domain, 1));
  }
  static Polynomial term(VarSet vars, Domain domain, const Monomial& m, const K& c) {
    Polynomial p(vars, domain);
    if (!Traits::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  // Accepts unsorted terms with repeats and zeros.
  static Polynomial from_terms(VarSet vars, Domain domain, std::vector<Term> terms) {
    Polynomial p(vars, domain);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  VarSet vars() const { return vars_; }
  Domain domain() const { return domain_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

  const Term& leading_term() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading term of zero polynomial");
    return terms_.front();
  }

  K coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return grlex_greater(t.mono, key); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Traits::from_int(domain_, 0);
  }

  // -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  int degree_in(int var) const {
    check_index(vars_, var);
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.mono.exp[var]);
    return d;
  }
  // Degree in the variables [first, first+count).
  int degree_in_block(int first, int count) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) {
      int s = 0;
      for (int i = first; i < first + count; ++i) s += t.mono.exp[i];
      d = std::max(d, s);
    }
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }
  // Every term has degree `du` in [first, first+count) and `dv` in the rest.
  bool is_bihomogeneous(int split, int du, int dv) const {
    for (const auto& t : terms_) {
      int a = 0, b = 0;
      for (int i = 0; i < split; ++i) a += t.mono.exp[i];
      for (int i = split; i < vars_.size(); ++i) b += t.mono.exp[i];
      if (a != du || b != dv) return false;
    }
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.vars_, a.domain_);
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) r.terms_.push_back({x.mono * y.mono, K(x.coeff * y.coeff)});
    r.normalize();
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const K& c) {
    Polynomial r(a.vars_, a.domain_);
    if (Traits::is_zero(c)) return r;
    r.terms_.reserve(a.size());
    for (const auto& t : a.terms_) {
      K v = t.coeff * c;
      if (!Traits::is_zero(v)) r.terms_.push_back({t.mono, v});
    }
    return r;
  }
  friend Polynomial operator*(const K& c, const Polynomial& a) { return a * c; }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_ || !(a.domain_ == b.domain_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const {
    Polynomial result = one(vars_, domain_);
    Polynomial base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  Polynomial derivative(int var) const {
    check_index(vars_, var);
    Polynomial r(vars_, domain_);
    for (const auto& t : terms_) {
      int e = t.mono.exp[var];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.exp[var] = static_cast<std::uint8_t>(e - 1);
      K c = t.coeff * Traits::from_int(domain_, e);
      if (!Traits::is_zero(c)) r.terms_.push_back({m, c});
    }
    r.normalize();
    return r;
  }

  K evaluate(std::span<const K> point) const {
    if (static_cast<int>(point.size()) != vars_.size())
      throw Error(ErrorKind::IndexOutOfRange, "evaluation point has wrong length");
    for (const auto& x : point)
      if (!(Traits::domain_of(x) == domain_)) throw Error(ErrorKind::DomainMismatch, "evaluation point domain");
    std::vector<std::vector<K>> powers(point.size());
    K acc = Traits::from_int(domain_, 0);
    for (const auto& t : terms_) {
      K v = t.coeff;
      for (int i = 0; i < vars_.size(); ++i) {
        int e = t.mono.exp[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Traits::from_int(domain_, 1));
        while (static_cast<int>(pw.size()) <= e) pw.push_back(K(pw.back() * point[i]));
        v = v * pw[e];
      }
      acc = acc + v;
    }
    return acc;
  }

  // Sets one variable to a value; the variable set is unchanged.
  Polynomial substitute_value(int var, const K& value) const {
    check_index(vars_, var);
    std::vector<K> pw{Traits::from_int(domain_, 1)};
    Polynomial r(vars_, domain_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      int e = t.mono.exp[var];
      while (static_cast<int>(pw.size()) <= e) pw.push_back(K(pw.back() * value));
      Monomial m = t.mono;
      m.exp[var] = 0;
      r.terms_.push_back({m, K(t.coeff * pw[e])});
    }
    r.normalize();
    return r;
  }

  // Substitutes variable i by images[i]; images share a target variable set.
  Polynomial compose(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != vars_.size())
      throw Error(ErrorKind::IndexOutOfRange, "compose needs one image per variable");
    if (images.empty()) return *this;
    VarSet target = images[0].vars_;
    for (const auto& im : images) {
      if (im.vars_ != target) throw Error(ErrorKind::VariableSetMismatch, "compose images disagree on variables");
      if (!(im.domain_ == domain_)) throw Error(ErrorKind::DomainMismatch, "compose image domain");
    }
    std::vector<std::vector<Polynomial>> powers(images.size());
    std::vector<Term> acc;
    for (const auto& t : terms_) {
      Polynomial prod = constant(target, domain_, t.coeff);
      for (int i = 0; i < vars_.size(); ++i) {
        int e = t.mono.exp[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(one(target, domain_));
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
        prod = prod * pw[e];
      }
      acc.insert(acc.end(), prod.terms_.begin(), prod.terms_.end());
    }
    return from_terms(target, domain_, std::move(acc));
  }

  // Moves variable i to position index_map[i] of `target`.
  Polynomial relabel(VarSet target, const std::vector<int>& index_map) const {
    if (static_cast<int>(index_map.size()) != vars_.size())
      throw Error(ErrorKind::IndexOutOfRange, "relabel map has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (int i = 0; i < vars_.size(); ++i) {
        if (t.mono.exp[i] == 0) continue;
        check_index(target, index_map[i]);
        int s = m.exp[index_map[i]] + t.mono.exp[i];
        if (s > 255) throw Error(ErrorKind::ExponentOverflow, "relabel exponent");
        m.exp[index_map[i]] = static_cast<std::uint8_t>(s);
      }
      out.push_back({m, t.coeff});
    }
    return from_terms(target, domain_, std::move(out));
  }

  template <class F, class Fn>
  Polynomial<F> map_coefficients(typename CoeffTraits<F>::Domain target_domain, Fn&& fn) const {
    std::vector<typename Polynomial<F>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono, fn(t.coeff)});
    return Polynomial<F>::from_terms(vars_, target_domain, std::move(out));
  }

  void check_compatible(const Polynomial& b) const {
    if (vars_ != b.vars_) throw Error(ErrorKind::VariableSetMismatch, "polynomials over different variables");
    if (!(domain_ == b.domain_)) throw Error(ErrorKind::DomainMismatch, "polynomials over different coefficient domains");
  }

 private:
  static void check_index(VarSet vars, int index) {
    if (index < 0 || index >= vars.size())
      throw Error(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(index));
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.check_compatible(b);
    Polynomial r(a.vars_, a.domain_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && grlex_greater(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || grlex_greater(b.terms_[j].mono, a.terms_[i].mono)) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? K(-t.coeff) : t.coeff});
      } else {
        K c = subtract ? K(a.terms_[i].coeff - b.terms_[j].coeff) : K(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!Traits::is_zero(c)) r.terms_.push_back({a.terms_[i].mono, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grlex_greater(x.mono, y.mono); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Monomial m = terms_[i].mono;
      K c = terms_[i].coeff;
      std::size_t j = i + 1;
      for (; j < terms_.size() && terms_[j].mono == m; ++j) c = c + terms_[j].coeff;
      if (!Traits::is_zero(c)) terms_[out++] = {m, c};
      i = j;
    }
    terms_.resize(out);
  }

  VarSet vars_;
  Domain domain_{};
  std::vector<Term> terms_;
};

using QPoly = Polynomial<Rational>;
using FpPoly = Polynomial<Fp>;

// Canonical text: grlex-descending terms, "c*m" with unit coefficients
// omitted, " + " / " - " separators, "0" for the zero polynomial.
template <class K>
std::string to_string(const Polynomial<K>& p) {
  using T = CoeffTraits<K>;
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = T::is_negative(t.coeff);
    K mag = neg ? K(-t.coeff) : t.coeff;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool unit = mag == T::from_int(T::domain_of(mag), 1);
    if (t.mono.degree() == 0) {
      out += T::to_string(mag);
    } else {
      if (!unit) out += T::to_string(mag) + "*";
      out += format_monomial(t.mono, p.vars());
    }
  }
  return out;
}

// Reduction of a rational polynomial modulo a word-sized prime. Throws
// BadModulus when a denominator vanishes.
inline FpPoly reduce_mod_p(const QPoly& p, std::uint32_t modulus) {
  return p.map_coefficients<Fp>(CoeffTraits<Fp>::Domain{modulus},
                                [modulus](const Rational& c) { return Fp{reduce_rational(c, modulus), modulus}; });
}

// Multivariate division by a list of divisors under grlex: returns quotients
// and remainder with a = sum q_i d_i + r and no term of r divisible by any
// leading monomial of the d_i. Requires invertible leading coefficients.
template <class K, class Inverse>
std::pair<std::vector<Polynomial<K>>, Polynomial<K>> divide_by(const Polynomial<K>& a,
                                                                const std::vector<Polynomial<K>>& divisors,
                                                                Inverse&& inverse) {
  using P = Polynomial<K>;
  using Term = typename P::Term;
  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<K> lead_inv;
  for (const auto& d : divisors) {
    a.check_compatible(d);
    lead_inv.push_back(inverse(d.leading_term().coeff));
  }
  std::vector<Term> remainder;
  P work = a;
  while (!work.is_zero()) {
    const Term lt = work.leading_term();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& dl = divisors[i].leading_term();
      if (!dl.mono.divides(lt.mono)) continue;
      Term q{lt.mono / dl.mono, K(lt.coeff * lead_inv[i])};
      quotient_terms[i].push_back(q);
      work = work - P::term(a.vars(), a.domain(), q.mono, q.coeff) * divisors[i];
      divided = true;
      break;
    }
    if (!divided) {
      remainder.push_back(lt);
      work = work - P::term(a.vars(), a.domain(), lt.mono, lt.coeff);
    }
  }
  std::vector<P> quotients;
  for (auto& qt : quotient_terms) quotients.push_back(P::from_terms(a.vars(), a.domain(), std::move(qt)));
  return {std::move(quotients), P::from_terms(a.vars(), a.domain(), std::move(remainder))};
}

// Exact quotient a / b; throws DivisionNotExact otherwise.
template <class K, class Inverse>
Polynomial<K> exact_divide(const Polynomial<K>& a, const Polynomial<K>& b, Inverse&& inverse) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  auto [q, r] = divide_by(a, std::vector<Polynomial<K>>{b}, inverse);
  if (!r.is_zero()) throw Error(ErrorKind::DivisionNotExact, "polynomial division leaves a remainder");
  return q[0];
}

inline Rational rational_inverse(const Rational& c) { return Rational(1) / c; }

}  // namespace nodal
