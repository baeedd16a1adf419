#include "valmon/keyform.hpp"

#include <algorithm>
#include <type_traits>

#include "valmon/error.hpp"

namespace valmon {

std::uint64_t KeyLevels::span() const {
  std::uint64_t out = 1;
  for (unsigned long s : radix) out *= s;
  return out;
}

namespace {

template <class C>
using Rows = std::vector<std::vector<C>>;  // rows[y][x]

template <class C>
struct LowerTerm {
  std::uint32_t y;
  std::uint32_t x;
  C c;
};

template <class C>
C convert(const Rational& q) {
  if constexpr (std::is_same_v<C, Integer>) {
    return q.get_num();
  } else {
    return q;
  }
}

template <class C>
bool all_zero(const std::vector<C>& row) {
  return std::all_of(row.begin(), row.end(), [](const C& c) { return sgn(c) == 0; });
}

template <class C>
void trim(Rows<C>& rows) {
  while (!rows.empty() && all_zero(rows.back())) rows.pop_back();
}

template <class C>
class Expander {
 public:
  Expander(const KeyLevels& levels, const Rational& scale) : levels_(levels), scale_(scale) {
    for (const BivarPoly* p : levels.keys) {
      std::vector<LowerTerm<C>> lower;
      const std::uint32_t m = p->deg_y();
      for (const auto& [mono, c] : p->terms()) {
        if (mono.y == m) {
          if (mono.x != 0 || c != 1) throw InternalError("key polynomial is not monic");
          continue;
        }
        lower.push_back({mono.y, mono.x, convert<C>(c)});
      }
      lower_.push_back(std::move(lower));
      degree_.push_back(m);
    }
  }

  void run(Rows<C> rows, std::size_t level, std::int64_t base, KeyVector& out) const {
    trim(rows);
    if (rows.empty()) return;
    if (level == 0) {
      const auto& row = rows.front();
      for (std::size_t a = 0; a < row.size(); ++a) {
        if (sgn(row[a]) == 0) continue;
        out.push_back({base + static_cast<std::int64_t>(a) * levels_.unit, Rational(row[a]) / scale_});
      }
      return;
    }
    const unsigned long radix = levels_.radix[level - 1];
    for (unsigned long k = 0; k < radix && !rows.empty(); ++k) {
      Rows<C> quotient = divide(rows, level);
      run(std::move(rows), level - 1, base + static_cast<std::int64_t>(k) * levels_.rho[level - 1], out);
      rows = std::move(quotient);
      trim(rows);
    }
    if (!rows.empty()) throw InternalError("expansion overflowed its radix");
  }

 private:
  // rows <- rows mod p_level; returns the quotient.
  Rows<C> divide(Rows<C>& rows, std::size_t level) const {
    const std::uint32_t m = degree_[level - 1];
    Rows<C> quotient;
    if (rows.size() <= m) return quotient;
    quotient.resize(rows.size() - m);
    for (std::size_t k = rows.size(); k-- > m;) {
      std::vector<C> q = std::move(rows[k]);
      rows[k].clear();
      if (all_zero(q)) continue;
      const std::size_t shift = k - m;
      for (const auto& t : lower_[level - 1]) {
        auto& row = rows[shift + t.y];
        if (row.size() < q.size() + t.x) row.resize(q.size() + t.x);
        for (std::size_t i = 0; i < q.size(); ++i) {
          if (sgn(q[i]) == 0) continue;
          if constexpr (std::is_same_v<C, Integer>) {
            mpz_submul(row[i + t.x].get_mpz_t(), q[i].get_mpz_t(), t.c.get_mpz_t());
          } else {
            row[i + t.x] -= q[i] * t.c;
          }
        }
      }
      quotient[shift] = std::move(q);
    }
    rows.resize(m);
    return quotient;
  }

  const KeyLevels& levels_;
  Rational scale_;
  std::vector<std::vector<LowerTerm<C>>> lower_;
  std::vector<std::uint32_t> degree_;
};

bool integral_keys(const KeyLevels& levels) {
  for (const BivarPoly* p : levels.keys)
    for (const auto& [m, c] : p->terms())
      if (!is_integer(c)) return false;
  return true;
}

template <class C>
void accumulate(Rows<C>& rows, std::uint32_t y, std::uint32_t x, const C& a, const C& b) {
  auto& row = rows[y];
  if (row.size() <= x) row.resize(x + 1);
  if constexpr (std::is_same_v<C, Integer>) {
    mpz_addmul(row[x].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  } else {
    row[x] += a * b;
  }
}

// Common denominator of the coefficients.
Integer denominator(const BivarPoly& f) {
  Integer den = 1;
  for (const auto& [m, c] : f.terms()) den = lcm(den, c.get_den());
  return den;
}

template <class C>
std::vector<LowerTerm<C>> scaled_terms(const BivarPoly& f, const Rational& scale) {
  std::vector<LowerTerm<C>> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) out.push_back({m.y, m.x, convert<C>(c * scale)});
  return out;
}

// Coordinates of f * g, with the product formed densely.
template <class C>
KeyVector expand_with(const BivarPoly& f, const BivarPoly& g, const KeyLevels& levels) {
  Rational sf(1), sg(1);
  if constexpr (std::is_same_v<C, Integer>) {
    sf = denominator(f);
    sg = denominator(g);
  }
  const auto tf = scaled_terms<C>(f, sf);
  const auto tg = scaled_terms<C>(g, sg);
  Rows<C> rows(f.deg_y() + g.deg_y() + 1);
  for (const auto& a : tf)
    for (const auto& b : tg) accumulate(rows, a.y + b.y, a.x + b.x, a.c, b.c);
  KeyVector out;
  Expander<C>(levels, sf * sg).run(std::move(rows), levels.keys.size(), 0, out);
  std::sort(out.begin(), out.end(), [](const KeyTerm& a, const KeyTerm& b) { return a.key < b.key; });
  return out;
}

}  // namespace

KeyVector expand_in_keys(const BivarPoly& f, const KeyLevels& levels) { return expand_in_keys(f, BivarPoly(1), levels); }

KeyVector expand_in_keys(const BivarPoly& f, const BivarPoly& g, const KeyLevels& levels) {
  if (f.is_zero() || g.is_zero()) return {};
  if (f.deg_y() + g.deg_y() >= levels.span()) throw DomainError("y-degree beyond the key levels");
  if (integral_keys(levels)) return expand_with<Integer>(f, g, levels);
  return expand_with<Rational>(f, g, levels);
}

void subtract_scaled(KeyMap& target, const KeyVector& v, const Rational& c, std::uint32_t shift, std::int64_t unit) {
  const std::int64_t offset = static_cast<std::int64_t>(shift) * unit;
  for (const auto& t : v) {
    auto it = target.try_emplace(t.key + offset).first;
    it->second -= t.coeff * c;
    if (it->second == 0) target.erase(it);
  }
}

KeyVector to_vector(const KeyMap& m) {
  KeyVector out;
  out.reserve(m.size());
  for (const auto& [k, c] : m) out.push_back({k, c});
  return out;
}

}  // namespace valmon
