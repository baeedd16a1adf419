#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "valmon/bipoly.hpp"
#include "valmon/valuation.hpp"

namespace valmon {

struct ReductionStep {
  std::size_t divisor;  ///< index into the basis
  BivarPoly quotient;
  Rational value;       ///< LE_z of the polynomial before this step
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  BivarPoly remainder;
};

/// One element a*f - b*g of a syzygy family, at the generator `value`.
struct SyzygyElement {
  Rational value;
  BivarPoly a;
  BivarPoly b;
  BivarPoly spoly;
};

struct GbResult {
  std::vector<BivarPoly> basis;
  bool complete = false;
  std::size_t iterations = 0;
};

struct GbLimits {
  std::size_t max_rounds = 16;
  std::size_t step_limit = 10000;
};

/// h with f = g h or LE_z(f - g h) < LE_z(f); nothing when LE_z(g) does not divide LE_z(f).
std::optional<BivarPoly> approx_quotient(const BivarPoly& f, const BivarPoly& g, const Valuation& val);

/// Reduce f over the basis, always dividing by the lowest-index basis element
/// whose value divides. Throws StepLimitExceeded past step_limit steps.
ReductionTrace reduce(const BivarPoly& f, const std::vector<BivarPoly>& basis, const Valuation& val,
                      std::size_t step_limit = GbLimits{}.step_limit);

/// One element per generator sigma + eta_sigma of <LE_z f> ∩ <LE_z g>, sigma
/// running over the digit part of Omega_i in ascending order.
std::vector<SyzygyElement> syzygy_family(const BivarPoly& f, const BivarPoly& g, const Valuation& val);

/// Round-based basis construction; complete is false when max_rounds is hit
/// while the last round still adjoined elements.
GbResult buchberger(const std::vector<BivarPoly>& gens, const Valuation& val, const GbLimits& limits = {});

/// Throws IncompleteBasis when gb.complete is false.
bool is_member(const BivarPoly& f, const GbResult& gb, const Valuation& val,
               std::size_t step_limit = GbLimits{}.step_limit);

}  // namespace valmon
