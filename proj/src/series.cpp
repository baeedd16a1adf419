#include "valmon/series.hpp"

#include <limits>

namespace valmon {

CycloSeries promote(const Series& a, unsigned order) {
  std::vector<CycloSeries::term_type> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) terms.push_back({t.exponent, Cyclotomic(order, t.coeff)});
  return CycloSeries::from_terms(std::move(terms));
}

std::string to_string(const Series& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += t.coeff < 0 ? " - " : " + ";
    else if (t.coeff < 0) out += "-";
    Rational mag = abs(t.coeff);
    const bool unit = mag == 1;
    if (t.exponent == 0) {
      out += to_string(mag);
      continue;
    }
    if (!unit) out += to_string(mag) + "*";
    out += "t";
    if (t.exponent != 1) out += "^" + (is_integer(t.exponent) ? to_string(t.exponent) : "(" + to_string(t.exponent) + ")");
  }
  return out;
}

namespace {

void validate_prefix(const std::vector<SeriesTerm>& prefix) {
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i].coeff == 0) throw InvalidSpec("zero coefficient at term " + std::to_string(i + 1));
    if (prefix[i].exponent <= 0) throw InvalidSpec("nonpositive exponent at term " + std::to_string(i + 1));
    if (i > 0 && prefix[i].exponent >= prefix[i - 1].exponent)
      throw InvalidSpec("exponents not strictly decreasing at term " + std::to_string(i + 1));
  }
}

}  // namespace

SimpleSeriesSpec::SimpleSeriesSpec(std::vector<SeriesTerm> prefix, TailKind kind, unsigned base,
                                   TailCallback tail)
    : prefix_(std::move(prefix)), kind_(kind), base_(base), tail_(std::move(tail)) {
  validate_prefix(prefix_);
}

SimpleSeriesSpec SimpleSeriesSpec::finite(std::vector<SeriesTerm> prefix) {
  return SimpleSeriesSpec(std::move(prefix), TailKind::none, 0, {});
}

SimpleSeriesSpec SimpleSeriesSpec::geometric(std::vector<SeriesTerm> prefix, unsigned base) {
  if (base < 2) throw InvalidSpec("geometric tail base must be at least 2");
  if (prefix.empty()) throw InvalidSpec("geometric tail needs a nonempty prefix");
  return SimpleSeriesSpec(std::move(prefix), TailKind::geometric, base, {});
}

SimpleSeriesSpec SimpleSeriesSpec::with_callback(std::vector<SeriesTerm> prefix, TailCallback tail) {
  if (!tail) throw InvalidSpec("empty tail callback");
  return SimpleSeriesSpec(std::move(prefix), TailKind::callback, 0, std::move(tail));
}

std::optional<SeriesTerm> SimpleSeriesSpec::raw_term(std::size_t index) const {
  if (index < prefix_.size()) return prefix_[index];
  switch (kind_) {
    case TailKind::none:
      return std::nullopt;
    case TailKind::geometric: {
      Rational e = prefix_.back().exponent;
      Integer scale = 1;
      mpz_ui_pow_ui(scale.get_mpz_t(), base_, index - prefix_.size() + 1);
      e /= scale;
      return SeriesTerm{Rational(1), e};
    }
    case TailKind::callback:
      return tail_(index);
  }
  return std::nullopt;
}

std::optional<SeriesTerm> SimpleSeriesSpec::term(std::size_t index) const {
  auto t = raw_term(index);
  if (!t || index < prefix_.size()) return t;
  if (t->coeff == 0) throw InvalidSpec("tail produced a zero coefficient at term " + std::to_string(index + 1));
  if (t->exponent <= 0) throw InvalidSpec("tail produced a nonpositive exponent at term " + std::to_string(index + 1));
  if (index > 0) {
    auto prev = raw_term(index - 1);
    if (prev && t->exponent >= prev->exponent)
      throw InvalidSpec("tail exponents not strictly decreasing at term " + std::to_string(index + 1));
  }
  return t;
}

std::vector<SeriesTerm> SimpleSeriesSpec::first_terms(std::size_t n) const {
  std::vector<SeriesTerm> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto t = term(i);
    if (!t)
      throw InsufficientPrecision("series has only " + std::to_string(i) + " terms, " + std::to_string(n) +
                                  " requested");
    out.push_back(std::move(*t));
  }
  return out;
}

Series truncate(const SimpleSeriesSpec& spec, std::size_t n) {
  std::vector<Series::term_type> terms;
  for (auto& t : spec.first_terms(n)) terms.push_back({t.exponent, t.coeff});
  return Series::from_terms(std::move(terms));
}

SimpleSeriesSpec dyadic_spec() {
  return SimpleSeriesSpec::geometric({{Rational(1), make_rational(1, 2)}}, 2);
}

SimpleSeriesSpec harmonic_spec() {
  return SimpleSeriesSpec::with_callback({}, [](std::size_t index) -> std::optional<SeriesTerm> {
    const long k = static_cast<long>(index) + 2;
    return SeriesTerm{Rational(k), make_rational(1, k)};
  });
}

namespace {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

SimpleSeriesSpec primes_spec() {
  std::vector<SeriesTerm> prefix{{Rational(1), Rational(2)},
                                 {Rational(1), make_rational(3, 2)},
                                 {Rational(1), make_rational(1, 2)}};
  return SimpleSeriesSpec::with_callback(prefix, [](std::size_t index) -> std::optional<SeriesTerm> {
    // index 3 -> 1/3, then successive primes.
    unsigned long p = 2;
    for (std::size_t seen = 2; seen < index;) {
      ++p;
      if (is_prime(p)) ++seen;
    }
    return SeriesTerm{Rational(1), make_rational(1, static_cast<long>(p))};
  });
}

FinitePuiseux::FinitePuiseux(Series series) : series_(std::move(series)), ram_index_(1) {
  Integer r = 1;
  for (const auto& t : series_.terms()) {
    if (t.exponent <= 0) throw DomainError("finite Puiseux series needs positive exponents");
    r = lcm(r, t.exponent.get_den());
  }
  if (!r.fits_uint_p()) throw DomainError("ramification index too large");
  ram_index_ = static_cast<unsigned>(r.get_ui());
}

CycloSeries conjugate(const FinitePuiseux& w, unsigned j) {
  const unsigned R = w.ram_index();
  if (j >= R) throw DomainError("conjugate index " + std::to_string(j) + " out of range for R = " + std::to_string(R));
  std::vector<CycloSeries::term_type> terms;
  for (const auto& t : w.series().terms()) {
    // exponent = m / R
    Integer m = t.exponent.get_num() * (Integer(R) / t.exponent.get_den());
    Integer power = mod(m * j, Integer(R));
    terms.push_back({t.exponent, Cyclotomic::zeta(R, power.get_ui()) * t.coeff});
  }
  return CycloSeries::from_terms(std::move(terms));
}

}  // namespace valmon
