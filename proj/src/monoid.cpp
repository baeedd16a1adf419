#include "valmon/monoid.hpp"

#include <algorithm>

#include "valmon/error.hpp"

namespace valmon {

MonoidContext::MonoidContext(SimpleSeriesSpec spec, std::size_t depth)
    : spec_(std::move(spec)), seqs_(derive(spec_, depth)) {
  s_.assign(depth + 1, 0);
  for (std::size_t j = 1; j <= depth; ++j) {
    if (!seqs_.s[j].fits_ulong_p()) throw InsufficientPrecision("partial ramification too large");
    s_[j] = seqs_.s[j].get_ui();
  }
}

namespace {

void trim(std::vector<unsigned long>& digits) {
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
}

}  // namespace

Rational rep_value(const MonoidRep& rep, const MonoidContext& ctx) {
  if (rep.n < 0) throw DomainError("negative integer part");
  if (rep.digits.size() > ctx.depth())
    throw DomainError("representation has " + std::to_string(rep.digits.size()) + " digits, context depth is " +
                      std::to_string(ctx.depth()));
  Rational value(rep.n);
  for (std::size_t j = 1; j <= rep.digits.size(); ++j) {
    if (rep.digits[j - 1] >= ctx.s(j)) throw DomainError("digit " + std::to_string(j) + " exceeds its bound");
    value += Rational(Integer(rep.digits[j - 1])) * ctx.rho(j);
  }
  return value;
}

std::optional<MonoidRep> decompose(const Rational& m, const MonoidContext& ctx) {
  if (m < 0) return std::nullopt;
  if (is_integer(m)) return MonoidRep{m.get_num(), {}};
  const auto& seqs = ctx.seqs();
  const Integer& b = m.get_den();
  std::size_t i = 1;
  while (i <= ctx.depth() && !mpz_divisible_p(seqs.reduced_r(i).get_mpz_t(), b.get_mpz_t())) ++i;
  if (i > ctx.depth())
    throw InsufficientPrecision("denominator " + b.get_str() + " not reached within depth " +
                                std::to_string(ctx.depth()));

  MonoidRep rep;
  rep.digits.assign(i, 0);
  Rational current = m;
  for (std::size_t j = i; j >= 1; --j) {
    // current lies in (1/r_{l(j)})Z; choose d_j so that current - d_j rho_j lies in (1/r_{l(j-1)})Z.
    Rational scaled = current * seqs.reduced_r(j);
    const Integer sj = seqs.s[j];
    Integer dj = mod(scaled.get_num() * inverse_mod(seqs.c[j], sj), sj);
    rep.digits[j - 1] = dj.get_ui();
    current -= Rational(dj) * seqs.rho[j];
  }
  if (!is_integer(current)) throw IdentityViolation("decompose left a non-integer remainder");
  if (current < 0) return std::nullopt;
  rep.n = current.get_num();
  trim(rep.digits);
  return rep;
}

std::vector<unsigned long> base_digits(const Integer& d, const MonoidContext& ctx) {
  if (d < 0) throw DomainError("negative degree");
  std::vector<unsigned long> digits;
  Integer rest = d;
  for (std::size_t j = 1; rest != 0; ++j) {
    if (j > ctx.depth()) throw DomainError("degree " + d.get_str() + " exceeds context depth");
    Integer sj(ctx.s(j));
    digits.push_back(mod(rest, sj).get_ui());
    rest /= sj;
  }
  return digits;
}

std::pair<Rational, MonoidRep> lambda_d(const Integer& d, const MonoidContext& ctx) {
  MonoidRep rep{0, base_digits(d, ctx)};
  return {rep_value(rep, ctx), rep};
}

std::optional<Rational> divides(const Rational& mg, const Rational& mf, const MonoidContext& ctx) {
  Rational diff = mf - mg;
  if (!in_monoid(diff, ctx)) return std::nullopt;
  return diff;
}

Rational canonical_min(const Rational& m, const MonoidContext& ctx) {
  auto rep = decompose(m, ctx);
  if (!rep) throw NotInMonoid(to_string(m) + " is not in the value monoid");
  return m - rep->n;
}

std::vector<std::pair<Rational, MonoidRep>> enumerate_omega(std::size_t i, const MonoidContext& ctx,
                                                             unsigned long n_max) {
  if (i > ctx.depth()) throw DomainError("Omega index exceeds context depth");
  std::vector<std::pair<Rational, MonoidRep>> out;
  std::vector<unsigned long> digits(i, 0);
  while (true) {
    MonoidRep base{0, digits};
    trim(base.digits);
    const Rational sigma = rep_value(base, ctx);
    for (unsigned long n = 0; n <= n_max; ++n) {
      MonoidRep rep = base;
      rep.n = n;
      out.emplace_back(sigma + Rational(Integer(n)), std::move(rep));
    }
    std::size_t j = 0;
    while (j < i && ++digits[j] == ctx.s(j + 1)) digits[j++] = 0;
    if (j == i) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace valmon
