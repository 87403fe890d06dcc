#include "nodal/verify/fq.hpp"

#include <charconv>

namespace nodal {

FqField::FqField(std::uint32_t p, int k) : p_(p), k_(k), n_(0) {
  if (k != 1 && k != 2) throw Error(ErrorKind::BadModulus, "extension degree must be 1 or 2");
  if (p == 2 || p == 3) throw Error(ErrorKind::BadModulus, "characteristic must not divide 6");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (1u << 16)) throw Error(ErrorKind::FieldTooLarge, "prime must be below 65536");
  for (std::uint32_t c = 2; c < p; ++c)
    if (pow_mod(c, (p - 1) / 2, p) == p - 1) {
      n_ = c;
      break;
    }
}

std::string FqField::name() const { return "F_" + std::to_string(p_) + (k_ == 2 ? "^2" : ""); }

Fq FqField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r), 0, this};
}

Fq FqField::from_rational(const Rational& r) const {
  if (mod_u32(r.get_den(), p_) == 0)
    throw Error(ErrorKind::BadReductionPrime, "denominator of " + to_string(r) + " vanishes mod " + std::to_string(p_));
  return {reduce_rational(r, p_), 0, this};
}

std::optional<Fq> FqField::zeta7() const {
  const std::uint64_t q = order();
  if ((q - 1) % 7 != 0) return std::nullopt;
  for (std::uint64_t i = 1; i < q; ++i) {
    Fq z = element(i).pow((q - 1) / 7);
    if (z != one()) return z;
  }
  return std::nullopt;
}

Fq Fq::pow(std::uint64_t e) const {
  Fq result = field->one(), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Fq Fq::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionNotExact, "inverse of zero in " + field->name());
  const std::uint32_t p = field->p();
  // (a + b t)(a - b t) = a^2 - n b^2 lies in F_p.
  std::uint32_t norm = sub_mod(mul_mod(a, a, p), mul_mod(field->nonresidue(), mul_mod(b, b, p), p), p);
  std::uint32_t inv = inv_mod(norm, p);
  return {mul_mod(a, inv, p), mul_mod(b ? p - b : 0, inv, p), field};
}

std::string to_string(const Fq& x) {
  if (x.field && x.field->k() == 2 && x.b != 0) return std::to_string(x.a) + "+" + std::to_string(x.b) + "*t";
  return std::to_string(x.a);
}

FieldSpec parse_field_spec(const std::string& text) {
  FieldSpec spec;
  auto caret = text.find('^');
  auto num = [&](std::string_view s, auto& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error(ErrorKind::InvalidConfig, "bad field specification '" + text + "'");
  };
  std::string_view sv(text);
  num(sv.substr(0, caret), spec.p);
  if (caret != std::string::npos) num(sv.substr(caret + 1), spec.k);
  if (spec.k != 1 && spec.k != 2) throw Error(ErrorKind::InvalidConfig, "extension degree must be 1 or 2: " + text);
  return spec;
}

FqPoly reduce_mod_q(const QPoly& p, const FqField& field) {
  return p.map_coefficients<Fq>(CoeffTraits<Fq>::Domain{&field},
                                [&](const Rational& c) { return field.from_rational(c); });
}

}  // namespace nodal
