#pragma once

#include <random>
#include <vector>

#include "nodal/cli/parser.hpp"
#include "nodal/core/polynomial.hpp"

namespace nodal::testing {

inline Rational random_rational(std::mt19937_64& rng, int num_bound = 9, int den_bound = 4) {
  std::uniform_int_distribution<int> n(-num_bound, num_bound), d(1, den_bound);
  return make_rational(n(rng), d(rng));
}

// Random polynomial with up to `terms` terms of total degree <= max_degree.
inline QPoly random_poly(std::mt19937_64& rng, VarSet vars, int terms, int max_degree, int num_bound = 9,
                         int den_bound = 4) {
  std::uniform_int_distribution<int> e(0, max_degree);
  std::vector<QPoly::Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int budget = e(rng);
    for (int i = 0; i < vars.size() && budget > 0; ++i) {
      std::uniform_int_distribution<int> take(0, budget);
      int k = i + 1 == vars.size() ? budget : take(rng);
      m.exp[i] = static_cast<std::uint8_t>(k);
      budget -= k;
    }
    out.push_back({m, random_rational(rng, num_bound, den_bound)});
  }
  return QPoly::from_terms(vars, {}, std::move(out));
}

// Random form of exact degree d with small integer coefficients.
// Only the first `nvars` variables appear when nvars > 0.
inline QPoly random_form(std::mt19937_64& rng, VarSet vars, int degree, int bound = 3, int nvars = 0) {
  std::uniform_int_distribution<int> c(-bound, bound);
  std::vector<QPoly::Term> out;
  for (const auto& m : monomials_of_degree(nvars > 0 ? nvars : vars.size(), degree)) out.push_back({m, Rational(c(rng))});
  return QPoly::from_terms(vars, {}, std::move(out));
}

inline QPoly X(const char* text) { return parse_poly(text, VarSet::x()); }
inline QPoly Y(const char* text) { return parse_poly(text, VarSet::y()); }
inline QPoly Z(const char* text) { return parse_poly(text, VarSet::z()); }
inline QPoly UV(const char* text) { return parse_poly(text, VarSet::uv()); }

}  // namespace nodal::testing
