#include "valmon/sequences.hpp"

#include <set>

#include "valmon/error.hpp"

namespace valmon {

namespace {

// Terms scanned without the ramification increasing before giving up.
constexpr std::size_t kScanBudget = 4096;

}  // namespace

DerivedSequences derive(const SimpleSeriesSpec& spec, std::size_t depth) {
  DerivedSequences out;
  out.depth = depth;
  out.e.push_back(Rational(0));
  out.r.push_back(Integer(1));
  out.l.push_back(0);

  std::size_t since_increase = 0;
  while (out.l.size() <= depth) {
    const std::size_t index = out.e.size();  // 1-based raw index of the next term
    auto t = spec.term(index - 1);
    if (!t)
      throw InsufficientPrecision("series ends after " + std::to_string(index - 1) + " terms; depth " +
                                  std::to_string(depth) + " needs more ramification");
    if (t->exponent <= 0) throw InvalidSpec("nonpositive exponent at term " + std::to_string(index));
    if (index > 1 && t->exponent >= out.e.back())
      throw InvalidSpec("exponents not strictly decreasing at term " + std::to_string(index));
    out.e.push_back(t->exponent);
    out.r.push_back(lcm(out.r.back(), t->exponent.get_den()));
    if (out.r.back() != out.r[index - 1]) {
      out.l.push_back(index);
      since_increase = 0;
    } else if (++since_increase > kScanBudget) {
      throw InsufficientPrecision("ramification did not increase within " + std::to_string(kScanBudget) +
                                  " terms");
    }
  }

  const std::size_t K = out.raw_length();
  out.u.assign(K + 1, Rational(0));
  for (std::size_t i = 1; i <= K; ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      sum += (Rational(out.r[i], out.r[j]) - Rational(out.r[i], out.r[j + 1])) * out.e[j + 1];
    out.u[i] = sum;
  }

  out.rho.assign(depth + 1, Rational(0));
  out.s.assign(depth + 1, Integer(0));
  out.c.assign(depth + 1, Integer(0));
  for (std::size_t i = 1; i <= depth; ++i) {
    const std::size_t li = out.l[i];
    out.rho[i] = out.u[li - 1] + out.e[li];
    out.s[i] = out.r[li] / out.r[out.l[i - 1]];
    Rational ci = out.rho[i] * out.r[li];
    if (!is_integer(ci)) throw IdentityViolation("rho_" + std::to_string(i) + " not in (1/r_{l(i)})Z");
    out.c[i] = ci.get_num();
  }
  return out;
}

namespace {

[[noreturn]] void violated(const std::string& identity, std::size_t index) {
  throw IdentityViolation(identity + " fails at index " + std::to_string(index));
}

bool in_lattice(const Rational& q, const Integer& denom) {
  return Rational(q * denom).get_den() == 1;
}

}  // namespace

SelfCheckReport self_check(const DerivedSequences& seqs) {
  SelfCheckReport report;
  const std::size_t w = seqs.depth;
  const std::size_t K = seqs.raw_length();
  if (seqs.l.size() != w + 1 || seqs.rho.size() != w + 1 || seqs.s.size() != w + 1 || seqs.r.size() != K + 1 ||
      seqs.u.size() != K + 1)
    throw IdentityViolation("sequence lengths inconsistent with depth");

  report.identities.push_back("recurrence: rho_1 = e_{l(1)}, rho_{i+1} = s_i rho_i - e_{l(i)} + e_{l(i+1)}");
  if (w >= 1) {
    if (seqs.rho[1] != seqs.e[seqs.l[1]]) violated("recurrence", 1);
    ++report.checks;
  }
  for (std::size_t i = 1; i < w; ++i) {
    if (seqs.rho[i + 1] != seqs.s[i] * seqs.rho[i] - seqs.e[seqs.l[i]] + seqs.e[seqs.l[i + 1]])
      violated("recurrence", i + 1);
    ++report.checks;
  }

  report.identities.push_back("sum formula: r_{l(i)} = 1 + sum_{j<=i} (s_j - 1) r_{l(j-1)}");
  {
    Integer sum = 0;
    for (std::size_t i = 0; i <= w; ++i) {
      if (i > 0) sum += (seqs.s[i] - 1) * seqs.reduced_r(i - 1);
      if (seqs.reduced_r(i) != 1 + sum) violated("sum formula", i);
      ++report.checks;
    }
  }

  report.identities.push_back("difference formula: rho_i = sum_{j<i} (s_j - 1) rho_j + e_{l(i)}");
  {
    Rational sum = 0;
    for (std::size_t i = 1; i <= w; ++i) {
      if (seqs.rho[i] != sum + seqs.e[seqs.l[i]]) violated("difference formula", i);
      sum += (Rational(seqs.s[i]) - 1) * seqs.rho[i];
      ++report.checks;
    }
  }

  report.identities.push_back("u-stabilization: r_i = r_k implies u_i = u_k");
  for (std::size_t i = 0; i <= K; ++i) {
    for (std::size_t k = i + 1; k <= K && seqs.r[k] == seqs.r[i]; ++k) {
      if (seqs.u[i] != seqs.u[k]) violated("u-stabilization", k);
      ++report.checks;
    }
  }
  for (std::size_t i = 1; i <= w; ++i) {
    if (seqs.u[seqs.l[i - 1]] != seqs.u[seqs.l[i] - 1]) violated("u-stabilization", i);
    ++report.checks;
  }

  report.identities.push_back("lowest terms: gcd(c_i, s_i) = 1, s_i >= 2");
  for (std::size_t i = 1; i <= w; ++i) {
    if (seqs.s[i] < 2 || gcd(seqs.c[i], seqs.s[i]) != 1) violated("lowest terms", i);
    if (seqs.rho[i] * seqs.reduced_r(i) != seqs.c[i]) violated("lowest terms", i);
    ++report.checks;
  }

  report.identities.push_back("residue: rho_i in (1/r_{l(i)})Z minus (1/r_{l(i-1)})Z, rho increasing");
  for (std::size_t i = 1; i <= w; ++i) {
    if (!in_lattice(seqs.rho[i], seqs.reduced_r(i)) || in_lattice(seqs.rho[i], seqs.reduced_r(i - 1)))
      violated("residue", i);
    if (i > 1 && seqs.rho[i] <= seqs.rho[i - 1]) violated("residue", i);
    ++report.checks;
  }
  return report;
}

}  // namespace valmon
