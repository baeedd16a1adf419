#include <doctest.h>

#include "support.hpp"
#include "valmon/cyclotomic.hpp"
#include "valmon/error.hpp"

using namespace valmon;
using testing::q;

namespace {

IntPoly ints(std::initializer_list<long> cs) {
  IntPoly out;
  for (long c : cs) out.push_back(c);
  return out;
}

// Coefficients of prod (x - zeta^j) over j coprime to n, in Q(zeta_n).
std::vector<Cyclotomic> primitive_product(unsigned n) {
  std::vector<Cyclotomic> poly{Cyclotomic(n, 1)};
  for (unsigned j = 1; j <= n; ++j) {
    if (std::gcd(j, n) != 1) continue;
    const Cyclotomic root = Cyclotomic::zeta(n, j);
    std::vector<Cyclotomic> next(poly.size() + 1, Cyclotomic(n));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * root;
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(parse_rational("-7") == q(-7));
  CHECK(parse_rational("+2/3") == q(2, 3));
  CHECK(to_string(q(3, 2)) == "3/2");
  CHECK(to_string(q(-4, 2)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("floor, ceil and modular helpers") {
  CHECK(floor(q(-1, 2)) == -1);
  CHECK(ceil(q(-1, 2)) == 0);
  CHECK(floor(q(7, 3)) == 2);
  CHECK(ceil(q(7, 3)) == 3);
  CHECK(mod(Integer(-3), Integer(5)) == 2);
  CHECK(inverse_mod(Integer(3), Integer(8)) == 3);
  CHECK_THROWS_AS(inverse_mod(Integer(2), Integer(8)), DomainError);
  CHECK(lcm(Integer(4), Integer(6)) == 12);
  CHECK(gcd(Integer(4), Integer(6)) == 2);
}

TEST_CASE("rational field laws on random samples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int i = 0; i < 500; ++i) {
    const Rational a = q(num(rng), den(rng)), b = q(num(rng), den(rng)), c = q(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (b != 0) CHECK((a / b) * b == a);
    CHECK(parse_rational(to_string(a)) == a);
    CHECK(floor(a) <= a);
    CHECK(a < floor(a) + 1);
  }
}

TEST_CASE("cyclotomic modulus examples") {
  CHECK(cyclotomic_modulus(1) == ints({-1, 1}));
  CHECK(cyclotomic_modulus(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_modulus(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_modulus(12) == ints({1, 0, -1, 0, 1}));
  CHECK_THROWS_AS(cyclotomic_modulus(0), DomainError);
}

TEST_CASE("cyclotomic modulus has degree phi(n) and vanishes at zeta_n") {
  for (unsigned n = 1; n <= 30; ++n) {
    const IntPoly phi = cyclotomic_modulus(n);
    REQUIRE(phi.size() == euler_phi(n) + 1);
    CHECK(phi.back() == 1);
    Cyclotomic value(n);
    for (std::size_t k = 0; k < phi.size(); ++k) value += Cyclotomic::zeta(n, k) * Rational(phi[k]);
    CHECK(value.is_zero());
  }
}

TEST_CASE("product of x - zeta^j over primitive roots is the modulus") {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto product = primitive_product(n);
    const IntPoly phi = cyclotomic_modulus(n);
    REQUIRE(product.size() == phi.size());
    for (std::size_t k = 0; k < phi.size(); ++k) {
      const auto c = product[k].as_rational();
      REQUIRE(c.has_value());
      CHECK(*c == Rational(phi[k]));
    }
  }
}

TEST_CASE("cyclotomic arithmetic examples") {
  const Cyclotomic i = Cyclotomic::zeta(4);
  CHECK((i * i).as_rational() == q(-1));
  const Cyclotomic a = Cyclotomic::zeta(7, 3) * q(2, 3) + Cyclotomic(7, q(1, 5));
  CHECK(a + Cyclotomic(7) == a);
  const Cyclotomic w = Cyclotomic::zeta(6);
  CHECK(w * w == w - Cyclotomic(6, 1));
  CHECK(Cyclotomic(4, q(5, 3)).as_rational() == q(5, 3));
  CHECK_FALSE(i.as_rational().has_value());
  CHECK((i + (-i) + Cyclotomic(4, 2)).as_rational() == q(2));
  CHECK(Cyclotomic::zeta(5, 12) == Cyclotomic::zeta(5, 2));
  CHECK_THROWS_AS(Cyclotomic::zeta(4) + Cyclotomic::zeta(6), DomainError);
}

TEST_CASE("cyclotomic ring laws and root-of-unity powers") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-6, 6);
  for (unsigned n : {3u, 5u, 8u, 9u, 12u, 15u}) {
    auto random_element = [&] {
      Cyclotomic out(n);
      for (unsigned k = 0; k < n; ++k) out += Cyclotomic::zeta(n, k) * q(num(rng), 1 + (k % 3));
      return out;
    };
    for (int trial = 0; trial < 20; ++trial) {
      const Cyclotomic a = random_element(), b = random_element(), c = random_element();
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
    }
    Cyclotomic power(n, 1);
    for (unsigned k = 0; k < n; ++k) power *= Cyclotomic::zeta(n);
    CHECK(power.as_rational() == q(1));
    Cyclotomic sum(n);
    for (unsigned k = 0; k < n; ++k) sum += Cyclotomic::zeta(n, k);
    CHECK(sum.is_zero());
  }
}
