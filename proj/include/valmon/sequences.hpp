#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "valmon/rational.hpp"
#include "valmon/series.hpp"

namespace valmon {

/// The sequences attached to a simple series, derived to depth w.
///
/// Raw sequences (e, r, u) are indexed by term position and cover indices up
/// to K = l(w); reduced sequences (l, rho, s, c) are indexed 0..w or 1..w.
/// Vectors store index 0 at position 0; entries with no meaning at index 0
/// (e_0, rho_0, s_0, c_0) hold zero.
struct DerivedSequences {
  std::size_t depth = 0;
  std::vector<Rational> e;         // e[1..K]
  std::vector<Integer> r;          // r[0..K], running lcm of exponent denominators
  std::vector<std::size_t> l;      // l[0..w]
  std::vector<Rational> u;         // u[0..K], bounding sequence
  std::vector<Rational> rho;       // rho[1..w]
  std::vector<Integer> s;          // s[1..w] = r_{l(i)} / r_{l(i-1)}
  std::vector<Integer> c;          // c[1..w] = rho_i * r_{l(i)}

  std::size_t raw_length() const noexcept { return e.size() - 1; }
  /// r_{l(i)}.
  const Integer& reduced_r(std::size_t i) const { return r.at(l.at(i)); }
};

/// Derive every sequence out to depth w (w generators rho_1..rho_w).
///
/// Throws InsufficientPrecision if the series ends (or a scan budget is hit)
/// before the ramification sequence has increased w times, and InvalidSpec
/// for nonpositive or nondecreasing exponents.
DerivedSequences derive(const SimpleSeriesSpec& spec, std::size_t depth);

/// Names of the identities checked by self_check, in order.
struct SelfCheckReport {
  std::vector<std::string> identities;
  std::size_t checks = 0;
};

/// Re-verifies the identities linking the sequences at every available
/// index; throws IdentityViolation naming the index and identity on failure.
SelfCheckReport self_check(const DerivedSequences& seqs);

}  // namespace valmon
