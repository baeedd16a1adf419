#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "valmon/bipoly.hpp"
#include "valmon/keyform.hpp"
#include "valmon/monoid.hpp"
#include "valmon/series.hpp"

namespace valmon {

/// LE_z(f) and LC_z(f), with the truncation depth that certified them.
struct LeadingData {
  Rational le;
  Rational lc;
  std::size_t certified_at = 0;

  friend bool operator==(const LeadingData&, const LeadingData&) = default;
};

struct EvalOptions {
  std::size_t start_depth = 4;
  std::size_t max_depth = 64;
};

/// f(t, z) for a finite series z, by plain series arithmetic.
Series substitute(const BivarPoly& f, const Series& z);

/// f(t, z_N) for the N-term truncation z_N, computed on an integer exponent grid.
Series evaluate_truncated(const BivarPoly& f, const SimpleSeriesSpec& spec, std::size_t n);

/// Attempts to certify LE_z(f) and LC_z(f) from the N-term truncation.
///
/// With d = e_{N+1} and f_k = (1/k!) d^k f/dy^k, the tail perturbation is
/// f(t,z) - f(t,z_N) = sum_{k>=1} f_k(t,z_N) (z - z_N)^k, whose LE is below
/// B = max_k LE(f_k(t,z_N)) + k d. The leading term of f(t,z_N) is accepted
/// when its exponent exceeds B. Returns nothing when N is not enough.
std::optional<LeadingData> eval_leading_at(const BivarPoly& f, const SimpleSeriesSpec& spec, std::size_t n);

/// Certified LE_z / LC_z with an increasing truncation schedule.
/// Throws DomainError for f = 0 and InsufficientPrecision when the series or
/// the depth budget runs out first.
LeadingData eval_leading(const BivarPoly& f, const SimpleSeriesSpec& spec, const EvalOptions& options = {});

/// prod_j (y - w_j) over the R conjugates of w, as a polynomial in Q[x][y].
/// The zero series gives y.
BivarPoly min_poly_finite_puiseux(const FinitePuiseux& w);

struct Preimage {
  BivarPoly poly;
  Rational lc;  ///< LC_z(poly)
};

/// A monoid context together with cached key polynomials (minimal polynomials
/// of the truncations of z that realize rho_j).
class Valuation {
 public:
  explicit Valuation(MonoidContext ctx, EvalOptions options = {});

  const MonoidContext& monoid() const noexcept { return ctx_; }
  const SimpleSeriesSpec& spec() const noexcept { return ctx_.spec(); }
  const EvalOptions& options() const noexcept { return options_; }

  /// LE_z / LC_z, read from key coordinates when they are available
  /// (certified_at = 0) and from eval_leading otherwise.
  LeadingData leading(const BivarPoly& f) const;

  /// Minimal polynomial of the first l(j)-1 terms of z; LE_z = rho_j.
  const BivarPoly& key_polynomial(std::size_t j) const;
  /// LC_z of key_polynomial(j).
  const Rational& key_lc(std::size_t j) const;

  /// Key coordinates exist when deg_y f is below prod_{j<=i} s_j for some i
  /// whose key polynomials have y-degree at most kKeyDegreeCap.
  bool has_key_coordinates(const BivarPoly& f) const;
  bool has_key_coordinates(const BivarPoly& f, const BivarPoly& g) const;
  /// Throws DomainError when has_key_coordinates(f) is false.
  KeyVector key_coordinates(const BivarPoly& f) const;
  /// Coordinates of f * g.
  KeyVector key_coordinates(const BivarPoly& f, const BivarPoly& g) const;
  /// Scaled value of x (r_{l(depth)}).
  std::int64_t key_unit() const noexcept { return unit_; }
  Rational key_value(std::int64_t key) const;
  LeadingData key_leading(const KeyTerm& t) const;
  /// prod_j p_j^{d_j} with its LC_z.
  const Preimage& key_product(const std::vector<unsigned long>& digits) const;
  /// sum coeff * x^a prod_j p_j^{d_j} over the coordinates.
  BivarPoly assemble(const KeyVector& v) const;

  static constexpr std::uint32_t kKeyDegreeCap = 128;

 private:
  struct Cache;

  MonoidContext ctx_;
  EvalOptions options_;
  std::int64_t unit_ = 0;  // 0: no key coordinates
  std::shared_ptr<Cache> cache_;
};

LeadingData eval_leading(const BivarPoly& f, const Valuation& val);

/// x^n prod_j p_j^{d_j} for the canonical representation of m; LE_z = m.
/// Throws NotInMonoid.
Preimage preimage_with_lc(const Rational& m, const Valuation& val);
BivarPoly preimage(const Rational& m, const Valuation& val);

}  // namespace valmon
