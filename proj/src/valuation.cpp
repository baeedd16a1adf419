#include "valmon/valuation.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

#include "valmon/error.hpp"

namespace valmon {

Series substitute(const BivarPoly& f, const Series& z) {
  if (f.is_zero()) return {};
  const auto rows = f.y_coefficients();
  auto row_series = [](const std::vector<Rational>& row) {
    std::vector<Series::term_type> terms;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) terms.push_back({Rational(Integer(i)), row[i]});
    return Series::from_terms(std::move(terms));
  };
  Series h = row_series(rows.back());
  for (std::size_t j = rows.size() - 1; j-- > 0;) h = h * z + row_series(rows[j]);
  return h;
}

namespace {

// Largest dense exponent grid the evaluator will allocate.
constexpr std::int64_t kGridCap = std::int64_t{1} << 24;

// z_N on the grid s = t^{1/R}: z_N = (1/D) sum coeff * s^offset.
struct Grid {
  Integer R = 1;
  Integer D = 1;
  std::int64_t r = 1;
  std::int64_t top = 0;  // e_1 * R
  std::vector<std::pair<std::int64_t, Integer>> terms;
};

Grid make_grid(const std::vector<SeriesTerm>& z) {
  Grid g;
  for (const auto& t : z) {
    g.R = lcm(g.R, t.exponent.get_den());
    g.D = lcm(g.D, t.coeff.get_den());
  }
  if (!g.R.fits_slong_p() || g.R > kGridCap) throw InsufficientPrecision("exponent grid too fine");
  g.r = g.R.get_si();
  for (const auto& t : z) {
    Integer off = t.exponent.get_num() * (g.R / t.exponent.get_den());
    Integer c = t.coeff.get_num() * (g.D / t.coeff.get_den());
    g.terms.emplace_back(off.get_si(), std::move(c));
  }
  if (!g.terms.empty()) g.top = g.terms.front().first;
  return g;
}

// f(t, z_N) as (1/denom) sum values[k] s^k.
struct GridValue {
  std::vector<Integer> values;
  Integer denom = 1;
  std::int64_t r = 1;

  std::optional<std::int64_t> top_index() const {
    for (std::size_t k = values.size(); k-- > 0;)
      if (sgn(values[k]) != 0) return static_cast<std::int64_t>(k);
    return std::nullopt;
  }

  std::pair<Rational, Rational> term_at(std::int64_t k) const {
    Rational e{Integer(k), Integer(r)};
    e.canonicalize();
    Rational c(values[k], denom);
    c.canonicalize();
    return {e, c};
  }
};

GridValue evaluate_on_grid(const BivarPoly& f, const Grid& grid) {
  GridValue out;
  out.r = grid.r;
  const auto rows = f.y_coefficients();
  const std::size_t d = rows.size() - 1;

  Integer A = 1;
  for (const auto& row : rows)
    for (const auto& c : row)
      if (c != 0) A = lcm(A, c.get_den());

  const std::int64_t deg_x = f.deg_x();
  const Integer span = Integer(deg_x) * grid.R + Integer(static_cast<unsigned long>(d)) * grid.top;
  if (span >= kGridCap) throw InsufficientPrecision("evaluation grid exceeds budget");
  const std::size_t size = span.get_ui() + 1;

  std::vector<Integer> dpow(d + 1);
  dpow[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) dpow[k] = dpow[k - 1] * grid.D;

  std::vector<Integer> h(size), next(size);
  std::int64_t hi = 0;  // highest index that may be nonzero in h
  auto add_row = [&](std::vector<Integer>& buf, const std::vector<Rational>& row, const Integer& scale) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      Integer c = row[i].get_num() * (A / row[i].get_den()) * scale;
      const std::int64_t idx = static_cast<std::int64_t>(i) * grid.r;
      buf[idx] += c;
      hi = std::max(hi, idx);
    }
  };
  add_row(h, rows[d], dpow[0]);

  for (std::size_t j = d; j-- > 0;) {
    const std::int64_t new_hi = hi + grid.top;
    for (std::int64_t k = 0; k <= new_hi; ++k) next[k] = 0;
    for (std::int64_t k = 0; k <= hi; ++k) {
      if (sgn(h[k]) == 0) continue;
      for (const auto& [off, c] : grid.terms) {
        if (c == 1) {
          mpz_add(next[k + off].get_mpz_t(), next[k + off].get_mpz_t(), h[k].get_mpz_t());
        } else {
          mpz_addmul(next[k + off].get_mpz_t(), h[k].get_mpz_t(), c.get_mpz_t());
        }
      }
    }
    hi = new_hi;
    std::swap(h, next);
    add_row(h, rows[j], dpow[d - j]);
  }
  h.resize(static_cast<std::size_t>(hi) + 1);
  out.values = std::move(h);
  out.denom = A * dpow[d];
  return out;
}

}  // namespace

Series evaluate_truncated(const BivarPoly& f, const SimpleSeriesSpec& spec, std::size_t n) {
  if (f.is_zero()) return {};
  const Grid grid = make_grid(spec.first_terms(n));
  const GridValue v = evaluate_on_grid(f, grid);
  std::vector<Series::term_type> terms;
  for (std::size_t k = v.values.size(); k-- > 0;) {
    if (sgn(v.values[k]) == 0) continue;
    auto [e, c] = v.term_at(static_cast<std::int64_t>(k));
    terms.push_back({e, c});
  }
  return Series::from_terms(std::move(terms));
}

std::optional<LeadingData> eval_leading_at(const BivarPoly& f, const SimpleSeriesSpec& spec, std::size_t n) {
  if (f.is_zero()) throw DomainError("valuation of the zero polynomial");
  const auto z = spec.first_terms(n);
  const auto next = spec.term(n);
  const Grid grid = make_grid(z);

  const GridValue value = evaluate_on_grid(f, grid);
  const auto top = value.top_index();
  if (!top) return std::nullopt;
  auto [le, lc] = value.term_at(*top);
  LeadingData result{le, lc, n};
  if (!next) return result;  // z is exactly z_N

  const Rational& gap = next->exponent;
  const Rational e1 = z.empty() ? next->exponent : z.front().exponent;
  const std::uint32_t d = f.deg_y();
  for (std::uint32_t k = 1; k <= d; ++k) {
    const Rational shift = Rational(k) * gap;
    // Upper bound for LE(f_k(t, z_N)) ignoring cancellation.
    std::optional<Rational> crude;
    for (const auto& [m, c] : f.terms()) {
      if (m.y < k) continue;
      Rational b = Rational(m.x) + Rational(m.y - k) * e1;
      if (!crude || b > *crude) crude = b;
    }
    if (!crude || *crude + shift < le) continue;
    const GridValue fk = evaluate_on_grid(f.taylor_coefficient(k), grid);
    const auto fk_top = fk.top_index();
    if (!fk_top) continue;
    if (fk.term_at(*fk_top).first + shift >= le) return std::nullopt;
  }
  return result;
}

LeadingData eval_leading(const BivarPoly& f, const SimpleSeriesSpec& spec, const EvalOptions& options) {
  if (f.is_zero()) throw DomainError("valuation of the zero polynomial");
  if (f.deg_x() == 0 && f.deg_y() == 0) return {Rational(0), f.coefficient(0, 0), 0};
  std::size_t n = std::max<std::size_t>(options.start_depth, 1);
  while (n > 0 && !spec.term(n - 1)) --n;
  while (true) {
    if (auto res = eval_leading_at(f, spec, n)) return *res;
    if (!spec.term(n))
      throw InsufficientPrecision("polynomial vanishes at the finite series; z is algebraic");
    if (++n > options.max_depth)
      throw InsufficientPrecision("leading term not certified within " + std::to_string(options.max_depth) +
                                  " terms");
  }
}

namespace {

using CycloPoly = std::map<Monomial, Cyclotomic>;

CycloPoly multiply(const CycloPoly& a, const CycloPoly& b) {
  CycloPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Cyclotomic c = ca * cb;
      if (c.is_zero()) continue;
      Monomial m{ma.x + mb.x, ma.y + mb.y};
      auto [it, inserted] = out.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

BivarPoly min_poly_finite_puiseux(const FinitePuiseux& w) {
  const unsigned R = w.ram_index();
  // Work in Q[s, y] with s = t^{1/R}; BivarPoly's x slot holds s.
  BivarPoly a = BivarPoly::y();
  for (const auto& t : w.series().terms()) {
    Integer m = t.exponent.get_num() * (Integer(R) / t.exponent.get_den());
    a -= BivarPoly::monomial(t.coeff, static_cast<std::uint32_t>(m.get_ui()), 0);
  }
  // Norm down the tower Q(s) > Q(s^q) > ... > Q(x), one prime q at a time:
  // N(a)(s) = prod_{j<q} a(zeta_q^j s), which lies in Q[s^q, y].
  for (unsigned q : prime_factors(R)) {
    CycloPoly product{{Monomial{0, 0}, Cyclotomic(q, Rational(1))}};
    for (unsigned j = 0; j < q; ++j) {
      CycloPoly conj;
      for (const auto& [m, c] : a.terms())
        conj.emplace(m, Cyclotomic::zeta(q, static_cast<unsigned long>(j) * m.x) * c);
      product = multiply(product, conj);
    }
    BivarPoly next;
    for (const auto& [m, c] : product) {
      auto value = c.as_rational();
      if (!value) throw InternalError("conjugate product has an irrational coefficient");
      if (m.x % q != 0) throw InternalError("conjugate product is not a polynomial in s^q");
      next += BivarPoly::monomial(*value, m.x / q, m.y);
    }
    a = std::move(next);
  }
  return a;
}

struct Valuation::Cache {
  std::mutex mutex;
  std::vector<std::optional<BivarPoly>> keys;
  std::vector<std::optional<Rational>> lcs;
  std::map<std::vector<unsigned long>, Preimage> products;
};

Valuation::Valuation(MonoidContext ctx, EvalOptions options)
    : ctx_(std::move(ctx)), options_(options), cache_(std::make_shared<Cache>()) {
  cache_->keys.resize(ctx_.depth() + 1);
  cache_->lcs.resize(ctx_.depth() + 1);
  if (ctx_.depth() > 0) {
    const Integer& top = ctx_.seqs().reduced_r(ctx_.depth());
    if (top <= Integer(1) << 40) unit_ = top.get_si();
  }
}

const BivarPoly& Valuation::key_polynomial(std::size_t j) const {
  if (j == 0 || j > ctx_.depth()) throw DomainError("key polynomial index out of range");
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->keys[j];
  if (!slot) slot = min_poly_finite_puiseux(FinitePuiseux(truncate(spec(), ctx_.seqs().l[j] - 1)));
  return *slot;
}

const Rational& Valuation::key_lc(std::size_t j) const {
  const BivarPoly& key = key_polynomial(j);
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->lcs[j];
  if (!slot) {
    const LeadingData lead = eval_leading(key, spec(), options_);
    if (lead.le != ctx_.rho(j))
      throw InternalError("key polynomial " + std::to_string(j) + " has value " + to_string(lead.le) +
                          ", expected " + to_string(ctx_.rho(j)));
    slot = lead.lc;
  }
  return *slot;
}

namespace {

// Fewest key levels whose span exceeds deg_y, within the degree cap.
std::optional<std::size_t> levels_for(const MonoidContext& ctx, std::uint32_t deg_y) {
  const auto& seqs = ctx.seqs();
  for (std::size_t i = 1; i <= ctx.depth(); ++i) {
    if (seqs.reduced_r(i - 1) > Valuation::kKeyDegreeCap) return std::nullopt;
    if (seqs.reduced_r(i) > deg_y) return i;
  }
  return std::nullopt;
}

}  // namespace

bool Valuation::has_key_coordinates(const BivarPoly& f) const { return has_key_coordinates(f, BivarPoly(1)); }

bool Valuation::has_key_coordinates(const BivarPoly& f, const BivarPoly& g) const {
  if (unit_ == 0) return false;
  const std::uint32_t deg_y = f.deg_y() + g.deg_y();
  if (!levels_for(ctx_, deg_y)) return false;
  const std::int64_t reach = static_cast<std::int64_t>(f.deg_x()) + g.deg_x() + deg_y + 1;
  return reach < (std::int64_t{1} << 62) / unit_;
}

KeyVector Valuation::key_coordinates(const BivarPoly& f) const { return key_coordinates(f, BivarPoly(1)); }

KeyVector Valuation::key_coordinates(const BivarPoly& f, const BivarPoly& g) const {
  if (!has_key_coordinates(f, g)) throw DomainError("no key coordinates for this polynomial");
  const std::size_t levels = *levels_for(ctx_, f.deg_y() + g.deg_y());
  KeyLevels kl;
  kl.unit = unit_;
  for (std::size_t j = 1; j <= levels; ++j) {
    kl.keys.push_back(&key_polynomial(j));
    kl.radix.push_back(ctx_.s(j));
    kl.rho.push_back(Rational(ctx_.rho(j) * unit_).get_num().get_si());
  }
  return expand_in_keys(f, g, kl);
}

Rational Valuation::key_value(std::int64_t key) const {
  Rational out{Integer(key), Integer(unit_)};
  out.canonicalize();
  return out;
}

LeadingData Valuation::key_leading(const KeyTerm& t) const {
  const Rational value = key_value(t.key);
  auto rep = decompose(value, ctx_);
  if (!rep) throw InternalError("key coordinate outside the value monoid");
  return {value, t.coeff * key_product(rep->digits).lc, 0};
}

const Preimage& Valuation::key_product(const std::vector<unsigned long>& digits) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->products.find(digits);
    if (it != cache_->products.end()) return it->second;
  }
  Preimage out{BivarPoly(1), Rational(1)};
  if (!digits.empty()) {
    std::vector<unsigned long> lower(digits.begin(), digits.end() - 1);
    while (!lower.empty() && lower.back() == 0) lower.pop_back();
    out = key_product(lower);
    const std::size_t j = digits.size();
    for (unsigned long k = 0; k < digits.back(); ++k) {
      out.poly = out.poly * key_polynomial(j);
      out.lc *= key_lc(j);
    }
  }
  std::lock_guard lock(cache_->mutex);
  return cache_->products.try_emplace(digits, std::move(out)).first->second;
}

BivarPoly Valuation::assemble(const KeyVector& v) const {
  std::map<std::vector<unsigned long>, BivarPoly> groups;
  for (const auto& t : v) {
    auto rep = decompose(key_value(t.key), ctx_);
    if (!rep) throw InternalError("key coordinate outside the value monoid");
    groups[rep->digits] += BivarPoly::monomial(t.coeff, static_cast<std::uint32_t>(rep->n.get_ui()), 0);
  }
  BivarPoly out;
  for (const auto& [digits, xpart] : groups) out += xpart * key_product(digits).poly;
  return out;
}

LeadingData Valuation::leading(const BivarPoly& f) const {
  if (f.is_zero()) throw DomainError("valuation of the zero polynomial");
  if (has_key_coordinates(f)) return key_leading(key_coordinates(f).back());
  return eval_leading(f, spec(), options_);
}

LeadingData eval_leading(const BivarPoly& f, const Valuation& val) { return val.leading(f); }

Preimage preimage_with_lc(const Rational& m, const Valuation& val) {
  auto rep = decompose(m, val.monoid());
  if (!rep) throw NotInMonoid(to_string(m) + " is not in the value monoid");
  if (!rep->n.fits_uint_p()) throw DomainError("integer part too large");
  const Preimage& product = val.key_product(rep->digits);
  return {product.poly * BivarPoly::monomial(1, static_cast<std::uint32_t>(rep->n.get_ui()), 0), product.lc};
}

BivarPoly preimage(const Rational& m, const Valuation& val) { return preimage_with_lc(m, val).poly; }

}  // namespace valmon
