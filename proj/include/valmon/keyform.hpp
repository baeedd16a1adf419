#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "valmon/bipoly.hpp"

namespace valmon {

/// coeff * x^a * prod_j p_j^{d_j}, identified by its value scaled by KeyLevels::unit.
struct KeyTerm {
  std::int64_t key = 0;
  Rational coeff;

  friend bool operator==(const KeyTerm&, const KeyTerm&) = default;
};

/// Ascending keys, nonzero coefficients.
using KeyVector = std::vector<KeyTerm>;
/// Mutable form used while reducing.
using KeyMap = std::map<std::int64_t, Rational>;

/// Monic key polynomials p_1..p_i with their radices and scaled values.
///
/// Basis elements x^a prod p_j^{d_j} with 0 <= d_j < s_j span the polynomials
/// of y-degree below prod s_j, and distinct elements have distinct values, so
/// the value of a polynomial is the largest key among its coordinates.
struct KeyLevels {
  std::int64_t unit = 1;
  std::vector<const BivarPoly*> keys;  // keys[j-1] = p_j
  std::vector<unsigned long> radix;    // radix[j-1] = s_j
  std::vector<std::int64_t> rho;       // rho[j-1] = rho_j * unit

  /// prod_j s_j.
  std::uint64_t span() const;
};

/// Coordinates of f; throws DomainError when deg_y f >= span().
KeyVector expand_in_keys(const BivarPoly& f, const KeyLevels& levels);
/// Coordinates of f * g without forming the product as a BivarPoly.
KeyVector expand_in_keys(const BivarPoly& f, const BivarPoly& g, const KeyLevels& levels);

/// target -= c * x^shift * v.
void subtract_scaled(KeyMap& target, const KeyVector& v, const Rational& c, std::uint32_t shift, std::int64_t unit);

KeyVector to_vector(const KeyMap& m);

}  // namespace valmon
