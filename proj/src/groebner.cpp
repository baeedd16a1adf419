#include "valmon/groebner.hpp"

#include <algorithm>
#include <map>

#include "valmon/error.hpp"

namespace valmon {

namespace {

// Basis elements with cached leading data and key coordinates of their
// multiples g * prod_j p_j^{d_j}.
class LeadBasis {
 public:
  explicit LeadBasis(const Valuation& val) : val_(val) {}

  void push(BivarPoly p) {
    leads.push_back(val_.leading(p));
    polys.push_back(std::move(p));
    multiples_.emplace_back();
  }

  std::size_t size() const noexcept { return polys.size(); }

  const KeyVector* multiple(std::size_t i, const std::vector<unsigned long>& digits) {
    auto [it, inserted] = multiples_[i].try_emplace(digits);
    if (inserted) {
      const BivarPoly& product = val_.key_product(digits).poly;
      if (val_.has_key_coordinates(polys[i], product)) it->second = val_.key_coordinates(polys[i], product);
    }
    return it->second ? &*it->second : nullptr;
  }

  std::vector<BivarPoly> polys;
  std::vector<LeadingData> leads;

 private:
  const Valuation& val_;
  std::vector<std::map<std::vector<unsigned long>, std::optional<KeyVector>>> multiples_;
};

// A polynomial held either in key coordinates or as a plain polynomial.
struct Working {
  std::optional<KeyMap> keys;
  BivarPoly poly;

  bool is_zero() const { return keys ? keys->empty() : poly.is_zero(); }
};

Working make_working(const BivarPoly& f, const Valuation& val) {
  Working w;
  if (!f.is_zero() && val.has_key_coordinates(f)) {
    KeyMap m;
    for (auto& t : val.key_coordinates(f)) m.emplace_hint(m.end(), t.key, std::move(t.coeff));
    w.keys = std::move(m);
  } else {
    w.poly = f;
  }
  return w;
}

BivarPoly to_poly(const Working& w, const Valuation& val) {
  return w.keys ? val.assemble(to_vector(*w.keys)) : w.poly;
}

// h = (LC(f) / LC(g p)) p with LE(p) = LE(f) - LE(g).
std::optional<BivarPoly> quotient_from_leads(const LeadingData& f, const LeadingData& g, const Valuation& val) {
  const Rational m = f.le - g.le;
  if (!in_monoid(m, val.monoid())) return std::nullopt;
  Preimage p = preimage_with_lc(m, val);
  return p.poly * (f.lc / (g.lc * p.lc));
}

ReductionTrace reduce_working(Working w, LeadBasis& basis, const Valuation& val, std::size_t step_limit,
                              bool record_quotients) {
  ReductionTrace trace;
  while (!w.is_zero()) {
    const LeadingData lead = w.keys ? val.key_leading(KeyTerm{w.keys->rbegin()->first, w.keys->rbegin()->second})
                                    : val.leading(w.poly);
    if (!trace.steps.empty() && !(lead.le < trace.steps.back().value))
      throw InternalError("reduction did not decrease the value");
    std::optional<MonoidRep> rep;
    std::size_t divisor = 0;
    for (; divisor < basis.size(); ++divisor) {
      if ((rep = decompose(lead.le - basis.leads[divisor].le, val.monoid()))) break;
    }
    if (!rep) break;
    if (trace.steps.size() >= step_limit)
      throw StepLimitExceeded("reduction exceeded " + std::to_string(step_limit) + " steps");
    if (!rep->n.fits_uint_p()) throw DomainError("integer part too large");
    const auto n = static_cast<std::uint32_t>(rep->n.get_ui());
    const Preimage& product = val.key_product(rep->digits);
    const Rational coeff = lead.lc / (basis.leads[divisor].lc * product.lc);

    if (w.keys) {
      if (const KeyVector* m = basis.multiple(divisor, rep->digits)) {
        subtract_scaled(*w.keys, *m, coeff, n, val.key_unit());
      } else {
        w.poly = to_poly(w, val);
        w.keys.reset();
      }
    }
    BivarPoly quotient;
    if (record_quotients || !w.keys) quotient = product.poly * BivarPoly::monomial(coeff, n, 0);
    if (!w.keys) w.poly -= basis.polys[divisor] * quotient;
    trace.steps.push_back({divisor, std::move(quotient), lead.le});
  }
  trace.remainder = to_poly(w, val);
  return trace;
}

// One syzygy generator: a = x^na P_da, b = scale * x^nb P_db.
struct SyzygyPlan {
  Rational value;
  MonoidRep a;
  MonoidRep b;
  Rational scale;
};

std::vector<SyzygyPlan> plan_syzygies(const LeadingData& lf, const LeadingData& lg, const Valuation& val) {
  const MonoidContext& ctx = val.monoid();
  auto rf = decompose(lf.le, ctx);
  auto rg = decompose(lg.le, ctx);
  if (!rf || !rg) throw InternalError("polynomial value outside the value monoid");
  const std::size_t depth = std::max(rf->digits.size(), rg->digits.size());
  const Rational top = std::max(lf.le, lg.le);

  std::vector<SyzygyPlan> plans;
  for (const auto& [sigma, rep] : enumerate_omega(depth, ctx, 0)) {
    Integer eta = ceil(top - sigma);
    std::optional<MonoidRep> ra, rb;
    // Terminates: sigma + eta - LE lies in the monoid for all large eta.
    while (!((ra = decompose(sigma + eta - lf.le, ctx)) && (rb = decompose(sigma + eta - lg.le, ctx)))) ++eta;
    const Rational lca = val.key_product(ra->digits).lc;
    const Rational lcb = val.key_product(rb->digits).lc;
    plans.push_back({sigma + eta, std::move(*ra), std::move(*rb), (lca * lf.lc) / (lcb * lg.lc)});
  }
  return plans;
}

BivarPoly plan_poly(const MonoidRep& rep, const Valuation& val) {
  if (!rep.n.fits_uint_p()) throw DomainError("integer part too large");
  return val.key_product(rep.digits).poly * BivarPoly::monomial(1, static_cast<std::uint32_t>(rep.n.get_ui()), 0);
}

// spoly = a g_i - b g_j, in key coordinates when both multiples have them.
Working plan_spoly(const SyzygyPlan& plan, std::size_t i, std::size_t j, LeadBasis& basis, const Valuation& val) {
  const KeyVector* ma = basis.multiple(i, plan.a.digits);
  const KeyVector* mb = basis.multiple(j, plan.b.digits);
  Working w;
  if (ma && mb && plan.a.n.fits_uint_p() && plan.b.n.fits_uint_p()) {
    w.keys.emplace();
    subtract_scaled(*w.keys, *ma, Rational(-1), static_cast<std::uint32_t>(plan.a.n.get_ui()), val.key_unit());
    subtract_scaled(*w.keys, *mb, plan.scale, static_cast<std::uint32_t>(plan.b.n.get_ui()), val.key_unit());
  } else {
    w.poly = plan_poly(plan.a, val) * basis.polys[i] - plan_poly(plan.b, val) * plan.scale * basis.polys[j];
  }
  return w;
}

}  // namespace

std::optional<BivarPoly> approx_quotient(const BivarPoly& f, const BivarPoly& g, const Valuation& val) {
  if (f.is_zero() || g.is_zero()) throw DomainError("approximate quotient with a zero polynomial");
  return quotient_from_leads(val.leading(f), val.leading(g), val);
}

ReductionTrace reduce(const BivarPoly& f, const std::vector<BivarPoly>& basis, const Valuation& val,
                      std::size_t step_limit) {
  LeadBasis lb(val);
  for (const auto& g : basis) {
    if (g.is_zero()) throw DomainError("zero polynomial in the basis");
    lb.push(g);
  }
  return reduce_working(make_working(f, val), lb, val, step_limit, true);
}

std::vector<SyzygyElement> syzygy_family(const BivarPoly& f, const BivarPoly& g, const Valuation& val) {
  if (f.is_zero() || g.is_zero()) throw DomainError("syzygy family of a zero polynomial");
  std::vector<SyzygyElement> family;
  for (const auto& plan : plan_syzygies(val.leading(f), val.leading(g), val)) {
    BivarPoly a = plan_poly(plan.a, val);
    BivarPoly b = plan_poly(plan.b, val) * plan.scale;
    BivarPoly spoly = a * f - b * g;
    family.push_back({plan.value, std::move(a), std::move(b), std::move(spoly)});
  }
  return family;
}

GbResult buchberger(const std::vector<BivarPoly>& gens, const Valuation& val, const GbLimits& limits) {
  if (gens.empty()) throw DomainError("empty generating set");
  LeadBasis basis(val);
  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("zero generator");
    basis.push(g);
  }

  // Pairs {g, h} with h new (index >= first_new) and g any earlier element, each once.
  auto spolys_for = [&](std::size_t first_new) {
    std::vector<Working> out;
    for (std::size_t hi = first_new; hi < basis.size(); ++hi)
      for (std::size_t gi = 0; gi < hi; ++gi)
        for (const auto& plan : plan_syzygies(basis.leads[gi], basis.leads[hi], val)) {
          Working w = plan_spoly(plan, gi, hi, basis, val);
          if (!w.is_zero()) out.push_back(std::move(w));
        }
    return out;
  };

  GbResult result;
  std::vector<Working> pending = spolys_for(0);
  while (true) {
    if (result.iterations == limits.max_rounds) break;
    ++result.iterations;
    const std::size_t first_new = basis.size();
    for (auto& u : pending) {
      BivarPoly rem = reduce_working(std::move(u), basis, val, limits.step_limit, false).remainder;
      if (!rem.is_zero()) basis.push(std::move(rem));
    }
    if (basis.size() == first_new) {
      result.complete = true;
      break;
    }
    pending = spolys_for(first_new);
  }
  result.basis = std::move(basis.polys);
  return result;
}

bool is_member(const BivarPoly& f, const GbResult& gb, const Valuation& val, std::size_t step_limit) {
  if (!gb.complete) throw IncompleteBasis("membership needs a complete basis");
  if (f.is_zero()) return true;
  return reduce(f, gb.basis, val, step_limit).remainder.is_zero();
}

}  // namespace valmon
