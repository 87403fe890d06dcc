#include "nodal/core/monomial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "nodal/core/error.hpp"

namespace nodal {

namespace {

struct Registry {
  std::mutex mu;
  std::map<std::vector<std::string>, std::unique_ptr<std::vector<std::string>>> sets;
};

Registry& registry() {
  static Registry r;
  return r;
}

const std::vector<std::string>* intern(const std::vector<std::string>& names) {
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto it = reg.sets.find(names);
  if (it == reg.sets.end())
    it = reg.sets.emplace(names, std::make_unique<std::vector<std::string>>(names)).first;
  return it->second.get();
}

}  // namespace

VarSet::VarSet() : data_(intern({})) {}

VarSet VarSet::of(const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) > kMaxVars)
    throw Error(ErrorKind::IndexOutOfRange, "at most " + std::to_string(kMaxVars) + " variables");
  return VarSet(intern(names));
}

VarSet VarSet::indexed(std::string_view prefix, int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return of(names);
}

VarSet VarSet::uv() { return of({"u0", "u1", "u2", "v0", "v1", "v2"}); }

int VarSet::size() const { return static_cast<int>(data_->size()); }
const std::string& VarSet::name(int i) const { return data_->at(i); }
const std::vector<std::string>& VarSet::names() const { return *data_; }

std::optional<int> VarSet::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if ((*data_)[i] == name) return i;
  return std::nullopt;
}

Monomial::Monomial(std::initializer_list<int> exps) {
  if (exps.size() > kMaxVars) throw Error(ErrorKind::IndexOutOfRange, "too many exponents");
  int i = 0;
  for (int e : exps) {
    if (e < 0 || e > 255) throw Error(ErrorKind::ExponentOverflow, "exponent out of range");
    exp[i++] = static_cast<std::uint8_t>(e);
  }
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = exp[i] + o.exp[i];
    if (s > 255) throw Error(ErrorKind::ExponentOverflow, "exponent exceeds 255");
    r.exp[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree, int offset) {
  std::vector<Monomial> out;
  Monomial cur;
  // Recursive fill in lexicographic-descending order.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur.exp[offset + var] = static_cast<std::uint8_t>(remaining);
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur.exp[offset + var] = static_cast<std::uint8_t>(e);
      self(self, var + 1, remaining - e);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

std::string format_monomial(const Monomial& m, VarSet vars) {
  std::string out;
  for (int i = 0; i < vars.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace nodal
