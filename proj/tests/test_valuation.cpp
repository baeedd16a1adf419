#include <doctest.h>

#include <map>

#include "support.hpp"
#include "valmon/error.hpp"
#include "valmon/valuation.hpp"

using namespace valmon;
using testing::P;
using testing::q;

namespace {

const Valuation& dyadic() {
  static const Valuation val(MonoidContext(dyadic_spec(), 8));
  return val;
}

Series S(std::initializer_list<std::pair<Rational, Rational>> terms) {
  std::vector<Series::term_type> out;
  for (const auto& [e, c] : terms) out.push_back({e, c});
  return Series::from_terms(std::move(out));
}

// prod_{j<R} (y - w_j) over all conjugates, multiplied out directly.
BivarPoly conjugate_product(const FinitePuiseux& w) {
  const unsigned R = w.ram_index();
  std::vector<CycloSeries> poly{CycloSeries::monomial(Rational(0), Cyclotomic(R, 1))};
  for (unsigned j = 0; j < R; ++j) {
    const CycloSeries root = conjugate(w, j);
    std::vector<CycloSeries> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = next[k + 1] + poly[k];
      next[k] = next[k] - poly[k] * root;
    }
    poly = std::move(next);
  }
  BivarPoly out;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    for (const auto& t : poly[k].terms()) {
      REQUIRE(is_integer(t.exponent));
      const auto c = t.coeff.as_rational();
      REQUIRE(c.has_value());
      out += BivarPoly::monomial(*c, static_cast<std::uint32_t>(t.exponent.get_num().get_si()), static_cast<std::uint32_t>(k));
    }
  }
  return out;
}

LeadingData oracle_leading(const BivarPoly& f, const SimpleSeriesSpec& spec, std::size_t n) {
  const auto [le, lc] = leading_data(testing::horner(f, truncate(spec, n)));
  return {le, lc, 0};
}

}  // namespace

TEST_CASE("leading data examples") {
  const auto spec = dyadic_spec();
  const auto x = eval_leading(P("x"), spec);
  CHECK(x.le == 1);
  CHECK(x.lc == 1);
  const auto y = eval_leading(P("y"), spec);
  CHECK(y.le == q(1, 2));
  CHECK(y.lc == 1);
  const auto f = eval_leading(P("y^2 - x"), spec);
  CHECK(f.le == q(3, 4));
  CHECK(f.lc == 2);
  CHECK(eval_leading(P("5"), spec).le == 0);
  CHECK_THROWS_AS(eval_leading(P("0"), spec), DomainError);
}

TEST_CASE("leading data on finite series and depth budgets") {
  const auto two = SimpleSeriesSpec::finite({{1, q(1, 2)}, {1, q(1, 4)}});
  const auto exact = eval_leading(P("y^2 - x"), two);
  CHECK(exact.le == q(3, 4));
  CHECK(exact.lc == 2);
  CHECK_THROWS_AS(eval_leading(P("y^2 - x"), dyadic_spec(), EvalOptions{1, 1}), InsufficientPrecision);
  // A finite series is exact once it is used in full.
  CHECK(eval_leading(P("y - 1"), SimpleSeriesSpec::finite({{1, q(1, 2)}})).le == q(1, 2));
}

TEST_CASE("truncated evaluation matches Horner evaluation") {
  testing::RandomPolys gen(23);
  for (const auto& spec : {dyadic_spec(), harmonic_spec(), primes_spec()}) {
    for (int i = 0; i < 25; ++i) {
      const BivarPoly f = gen.next();
      for (std::size_t n : {1u, 3u, 5u}) CHECK(evaluate_truncated(f, spec, n) == testing::horner(f, truncate(spec, n)));
    }
    CHECK(substitute(P("y^2 - x"), truncate(spec, 3)) == testing::horner(P("y^2 - x"), truncate(spec, 3)));
  }
}

TEST_CASE("certified leading terms are stable under deeper truncation") {
  testing::RandomPolys gen(29);
  for (const auto& spec : {dyadic_spec(), harmonic_spec()}) {
    for (int i = 0; i < 60; ++i) {
      const BivarPoly f = gen.next();
      const LeadingData lead = eval_leading(f, spec);
      const LeadingData deeper = oracle_leading(f, spec, lead.certified_at + 3);
      CHECK(lead.le == deeper.le);
      CHECK(lead.lc == deeper.lc);
      const auto again = eval_leading_at(f, spec, lead.certified_at + 3);
      REQUIRE(again.has_value());
      CHECK(again->le == lead.le);
      CHECK(again->lc == lead.lc);
    }
  }
}

TEST_CASE("leading data is multiplicative") {
  testing::RandomPolys gen(31);
  const auto spec = dyadic_spec();
  for (int i = 0; i < 40; ++i) {
    const BivarPoly f = gen.next(3), g = gen.next(3);
    const auto lf = eval_leading(f, spec), lg = eval_leading(g, spec), lfg = eval_leading(f * g, spec);
    CHECK(lfg.le == lf.le + lg.le);
    CHECK(lfg.lc == lf.lc * lg.lc);
    if (!(f + g).is_zero()) CHECK(eval_leading(f + g, spec).le <= std::max(lf.le, lg.le));
  }
}

TEST_CASE("minimal polynomial examples") {
  CHECK(min_poly_finite_puiseux(FinitePuiseux(S({{1, 1}}))) == P("y - x"));
  CHECK(min_poly_finite_puiseux(FinitePuiseux(S({{q(1, 2), 1}}))) == P("y^2 - x"));
  CHECK(min_poly_finite_puiseux(FinitePuiseux(Series())) == P("y"));
  const BivarPoly p = min_poly_finite_puiseux(FinitePuiseux(S({{q(1, 2), 1}, {q(1, 4), 1}})));
  CHECK(p.deg_y() == 4);
  CHECK(eval_leading(p, dyadic_spec()).le == q(11, 8));
}

TEST_CASE("minimal polynomial equals the straight conjugate product") {
  const std::vector<Series> samples{
      S({{q(1, 2), 1}, {q(1, 3), 1}}),
      S({{q(1, 2), 1}, {q(1, 4), 1}, {q(1, 8), 1}}),
      S({{q(1, 2), 2}, {q(1, 3), 3}}),
      S({{q(3, 2), -1}, {q(1, 2), q(1, 3)}, {q(1, 5), 1}}),
      S({{2, 1}, {q(1, 6), 4}}),
      truncate(harmonic_spec(), 3),
  };
  for (const auto& s : samples) {
    const FinitePuiseux w(s);
    const BivarPoly p = min_poly_finite_puiseux(w);
    CHECK(p == conjugate_product(w));
    CHECK(p.deg_y() == w.ram_index());
    CHECK(p.coefficient(0, p.deg_y()) == 1);
    // p(t, w) = 0.
    CHECK(testing::horner(p, s).is_zero());
  }
}

TEST_CASE("key polynomials have the predicted degree and value") {
  const auto& val = dyadic();
  const auto& seqs = val.monoid().seqs();
  for (std::size_t i = 1; i <= 6; ++i) {
    const BivarPoly& p = val.key_polynomial(i);
    CHECK(Integer(p.deg_y()) == seqs.r[seqs.l[i] - 1]);
    CHECK(eval_leading(p, dyadic_spec()).le == seqs.rho[i]);
  }
  CHECK(val.key_polynomial(1) == P("y"));
  CHECK(val.key_polynomial(2) == P("y^2 - x"));
  CHECK_THROWS_AS(val.key_polynomial(0), DomainError);
  CHECK_THROWS_AS(val.key_polynomial(9), DomainError);
  const Valuation harmonic(MonoidContext(harmonic_spec(), 4));
  for (std::size_t i = 1; i <= 3; ++i)
    CHECK(eval_leading(harmonic.key_polynomial(i), harmonic_spec()).le == harmonic.monoid().rho(i));
}

TEST_CASE("preimage examples") {
  const auto& val = dyadic();
  CHECK(preimage(1, val) == P("x"));
  CHECK(preimage(q(3, 4), val) == P("y^2 - x"));
  CHECK(preimage(q(7, 4), val) == P("x*(y^2 - x)"));
  CHECK(preimage(0, val) == P("1"));
  CHECK_THROWS_AS(preimage(q(1, 4), val), NotInMonoid);
}

TEST_CASE("preimages realize their value") {
  const auto& val = dyadic();
  for (const auto& [m, rep] : enumerate_omega(4, val.monoid(), 2)) {
    const Preimage p = preimage_with_lc(m, val);
    const LeadingData lead = eval_leading(p.poly, dyadic_spec());
    CHECK(lead.le == m);
    CHECK(lead.lc == p.lc);
  }
}

TEST_CASE("key coordinates reassemble and give the series leading term") {
  std::vector<std::pair<const char*, Valuation>> vals;
  vals.emplace_back("dyadic", Valuation(MonoidContext(dyadic_spec(), 6)));
  vals.emplace_back("harmonic", Valuation(MonoidContext(harmonic_spec(), 3)));
  vals.emplace_back("halves", Valuation(MonoidContext(
                                  SimpleSeriesSpec::geometric({{q(1, 2), q(1, 2)}, {q(-3, 2), q(1, 3)}}, 2), 4)));
  testing::RandomPolys gen(37);
  for (const auto& [name, val] : vals) {
    CAPTURE(name);
    for (int i = 0; i < 60; ++i) {
      const BivarPoly f = gen.next(5);
      REQUIRE(val.has_key_coordinates(f));
      const KeyVector v = val.key_coordinates(f);
      CHECK(val.assemble(v) == f);
      for (std::size_t k = 1; k < v.size(); ++k) CHECK(v[k - 1].key < v[k].key);
      const LeadingData key = val.key_leading(v.back());
      const LeadingData series = eval_leading(f, val.spec());
      CHECK(key.le == series.le);
      CHECK(key.lc == series.lc);
      CHECK(val.leading(f).le == series.le);
      const BivarPoly g = gen.next(2);
      if (val.has_key_coordinates(f, g)) CHECK(val.key_coordinates(f, g) == val.key_coordinates(f * g));
    }
  }
}

TEST_CASE("key coordinates are unavailable past the key degree cap") {
  const Valuation val(MonoidContext(dyadic_spec(), 10));
  CHECK(val.has_key_coordinates(P("y^200")));
  CHECK_FALSE(val.has_key_coordinates(P("y^300")));
  CHECK_THROWS_AS(val.key_coordinates(P("y^300")), DomainError);
}
