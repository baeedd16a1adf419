#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "valmon/rational.hpp"
#include "valmon/sequences.hpp"
#include "valmon/series.hpp"

namespace valmon {

/// m = n + sum_j digits[j-1] * rho_j with 0 <= d_j < s_j; trailing zero digits trimmed.
struct MonoidRep {
  Integer n = 0;
  std::vector<unsigned long> digits;

  friend bool operator==(const MonoidRep&, const MonoidRep&) = default;
};

/// The value monoid of a simple series, described through its derived sequences.
class MonoidContext {
 public:
  MonoidContext(SimpleSeriesSpec spec, std::size_t depth);

  const SimpleSeriesSpec& spec() const noexcept { return spec_; }
  const DerivedSequences& seqs() const noexcept { return seqs_; }
  std::size_t depth() const noexcept { return seqs_.depth; }

  const Rational& rho(std::size_t j) const { return seqs_.rho.at(j); }
  unsigned long s(std::size_t j) const { return s_.at(j); }

 private:
  SimpleSeriesSpec spec_;
  DerivedSequences seqs_;
  std::vector<unsigned long> s_;
};

Rational rep_value(const MonoidRep& rep, const MonoidContext& ctx);

/// Membership in the value monoid; the unique canonical representation when
/// m belongs. Negative m is never a member.
std::optional<MonoidRep> decompose(const Rational& m, const MonoidContext& ctx);

inline bool in_monoid(const Rational& m, const MonoidContext& ctx) { return decompose(m, ctx).has_value(); }

/// Mixed-radix digits of d with place values r_{l(j-1)} and bounds s_j.
std::vector<unsigned long> base_digits(const Integer& d, const MonoidContext& ctx);

/// The least value of a polynomial with y-degree d, and its representation (n = 0).
std::pair<Rational, MonoidRep> lambda_d(const Integer& d, const MonoidContext& ctx);

/// mf - mg when it lies in the monoid.
std::optional<Rational> divides(const Rational& mg, const Rational& mf, const MonoidContext& ctx);

/// The least monoid element congruent to m modulo Z; throws NotInMonoid.
Rational canonical_min(const Rational& m, const MonoidContext& ctx);

/// All n + sum_{j<=i} d_j rho_j with 0 <= n <= n_max, ascending.
std::vector<std::pair<Rational, MonoidRep>> enumerate_omega(std::size_t i, const MonoidContext& ctx,
                                                             unsigned long n_max);

}  // namespace valmon
