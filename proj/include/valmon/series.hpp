#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valmon/cyclotomic.hpp"
#include "valmon/error.hpp"
#include "valmon/rational.hpp"

namespace valmon {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const Cyclotomic& c) { return c.is_zero(); }

template <class Coeff>
struct Term {
  Rational exponent;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite-support generalized power series sum c * t^e, terms in strictly
/// descending exponent order with no zero coefficients. Empty means zero.
template <class Coeff>
class BasicSeries {
 public:
  using term_type = Term<Coeff>;

  BasicSeries() = default;

  /// Any order, duplicates merged, zeros dropped.
  static BasicSeries from_terms(std::vector<term_type> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const term_type& a, const term_type& b) { return a.exponent > b.exponent; });
    BasicSeries out;
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
        out.terms_.back().coeff += t.coeff;
        continue;
      }
      if (!out.terms_.empty() && coeff_is_zero(out.terms_.back().coeff)) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
    if (!out.terms_.empty() && coeff_is_zero(out.terms_.back().coeff)) out.terms_.pop_back();
    return out;
  }

  static BasicSeries monomial(Rational exponent, Coeff coeff) {
    BasicSeries out;
    if (!coeff_is_zero(coeff)) out.terms_.push_back({std::move(exponent), std::move(coeff)});
    return out;
  }

  const std::vector<term_type>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const term_type& leading() const {
    if (terms_.empty()) throw DomainError("leading term of the zero series");
    return terms_.front();
  }

  BasicSeries operator-() const {
    BasicSeries out(*this);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) {
    BasicSeries out;
    out.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent > j->exponent)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->exponent > i->exponent) {
        out.terms_.push_back(*j++);
      } else {
        Coeff c = i->coeff;
        c += j->coeff;
        if (!coeff_is_zero(c)) out.terms_.push_back({i->exponent, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) { return a + (-b); }

  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    std::vector<term_type> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) raw.push_back({s.exponent + t.exponent, s.coeff * t.coeff});
    return from_terms(std::move(raw));
  }

  friend bool operator==(const BasicSeries&, const BasicSeries&) = default;

 private:
  std::vector<term_type> terms_;
};

using Series = BasicSeries<Rational>;
using CycloSeries = BasicSeries<Cyclotomic>;

/// (LE, LC); throws DomainError on the zero series.
template <class Coeff>
std::pair<Rational, Coeff> leading_data(const BasicSeries<Coeff>& a) {
  const auto& t = a.leading();
  return {t.exponent, t.coeff};
}

/// Number of identical initial terms.
template <class Coeff>
std::size_t agreement_order(const BasicSeries<Coeff>& a, const BasicSeries<Coeff>& b) {
  std::size_t m = 0;
  while (m < a.size() && m < b.size() && a.terms()[m] == b.terms()[m]) ++m;
  return m;
}

/// Embed a rational series into Q(zeta_n).
CycloSeries promote(const Series& a, unsigned order);

std::string to_string(const Series& a);

/// One term c * t^e of a simple series.
struct SeriesTerm {
  Rational coeff;
  Rational exponent;

  friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

enum class TailKind { none, geometric, callback };

/// A simple series z = sum c_i t^{e_i} with positive, strictly decreasing
/// exponents: a finite prefix plus an optional rule for further terms.
class SimpleSeriesSpec {
 public:
  /// Supplies the term at 0-based position `index` (index >= prefix length),
  /// or nothing once the series ends.
  using TailCallback = std::function<std::optional<SeriesTerm>(std::size_t index)>;

  static SimpleSeriesSpec finite(std::vector<SeriesTerm> prefix);
  /// Continues with e_{i+1} = e_i / base and coefficient 1.
  static SimpleSeriesSpec geometric(std::vector<SeriesTerm> prefix, unsigned base);
  static SimpleSeriesSpec with_callback(std::vector<SeriesTerm> prefix, TailCallback tail);

  /// 0-based term access; nothing past the end of a finite series.
  /// Throws InvalidSpec if a tail term breaks positivity or monotonicity.
  std::optional<SeriesTerm> term(std::size_t index) const;

  /// Exactly n leading terms, or InsufficientPrecision.
  std::vector<SeriesTerm> first_terms(std::size_t n) const;

  const std::vector<SeriesTerm>& prefix() const noexcept { return prefix_; }
  TailKind tail_kind() const noexcept { return kind_; }
  unsigned geometric_base() const noexcept { return base_; }

 private:
  SimpleSeriesSpec(std::vector<SeriesTerm> prefix, TailKind kind, unsigned base, TailCallback tail);

  std::optional<SeriesTerm> raw_term(std::size_t index) const;

  std::vector<SeriesTerm> prefix_;
  TailKind kind_ = TailKind::none;
  unsigned base_ = 0;
  TailCallback tail_;
};

/// The series of the first n terms of z.
Series truncate(const SimpleSeriesSpec& spec, std::size_t n);

/// e_i = 1/2^i, c_i = 1.
SimpleSeriesSpec dyadic_spec();
/// z = 2t^{1/2} + 3t^{1/3} + 4t^{1/4} + ...
SimpleSeriesSpec harmonic_spec();
/// z = t^2 + t^{3/2} + t^{1/2} + t^{1/3} + t^{1/5} + t^{1/7} + ... (reciprocal odd primes).
SimpleSeriesSpec primes_spec();

/// A finite series with rational coefficients and positive exponents, and its
/// ramification index R (lcm of exponent denominators; 1 for zero).
class FinitePuiseux {
 public:
  explicit FinitePuiseux(Series series);

  const Series& series() const noexcept { return series_; }
  unsigned ram_index() const noexcept { return ram_index_; }

 private:
  Series series_;
  unsigned ram_index_;
};

/// w with t^{1/R} replaced by zeta_R^j t^{1/R}; coefficients live in Q(zeta_R).
CycloSeries conjugate(const FinitePuiseux& w, unsigned j);

}  // namespace valmon
