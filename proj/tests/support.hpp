#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "valmon/bipoly.hpp"
#include "valmon/monoid.hpp"
#include "valmon/series.hpp"

namespace valmon::testing {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline BivarPoly P(const char* text) { return parse_poly(text); }

/// rho_i for the dyadic series: a_i / 2^i with a_1 = 1, a_{i+1} = 4 a_i - 1.
inline std::vector<Rational> dyadic_rho(std::size_t count) {
  std::vector<Rational> out;
  Integer a = 1;
  Integer den = 2;
  for (std::size_t i = 0; i < count; ++i) {
    Rational r(a, den);
    r.canonicalize();
    out.push_back(r);
    a = 4 * a - 1;
    den *= 2;
  }
  return out;
}

/// Every n + sum_j d_j g_j <= bound with unrestricted d_j >= 0.
inline std::set<Rational> reachable(const std::vector<Rational>& gens, const Rational& bound) {
  std::set<Rational> seen{Rational(0)};
  std::vector<Rational> frontier{Rational(0)};
  std::vector<Rational> all = gens;
  all.push_back(Rational(1));
  while (!frontier.empty()) {
    Rational v = frontier.back();
    frontier.pop_back();
    for (const auto& g : all) {
      Rational w = v + g;
      if (w <= bound && seen.insert(w).second) frontier.push_back(w);
    }
  }
  return seen;
}

/// Horner evaluation of f(t, z) with plain series arithmetic.
inline Series horner(const BivarPoly& f, const Series& z) {
  const Series t = Series::monomial(Rational(1), Rational(1));
  Series out;
  const auto rows = f.y_coefficients();
  for (std::size_t j = rows.size(); j-- > 0;) {
    Series coeff;
    Series power = Series::monomial(Rational(0), Rational(1));
    for (const auto& c : rows[j]) {
      coeff = coeff + power * Series::monomial(Rational(0), c);
      power = power * t;
    }
    out = out * z + coeff;
  }
  return out;
}

class RandomPolys {
 public:
  explicit RandomPolys(unsigned seed) : rng_(seed) {}

  /// Total degree <= max_deg, integer coefficients in [-bound, bound], never zero.
  BivarPoly next(unsigned max_deg = 4, int bound = 5) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::bernoulli_distribution keep(0.45);
    while (true) {
      BivarPoly f;
      for (unsigned dy = 0; dy <= max_deg; ++dy)
        for (unsigned dx = 0; dx + dy <= max_deg; ++dx)
          if (keep(rng_)) f += BivarPoly::monomial(coeff(rng_), dx, dy);
      if (!f.is_zero()) return f;
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace valmon::testing
