#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "valmon/rational.hpp"

namespace valmon {

/// x^x_deg y^y_deg, ordered by (y-degree, x-degree).
struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

/// Sparse polynomial in Q[x, y]; no zero coefficients are stored.
class BivarPoly {
 public:
  using map_type = std::map<Monomial, Rational>;

  BivarPoly() = default;
  BivarPoly(const Rational& constant);  // NOLINT: implicit scalars read naturally
  BivarPoly(long constant) : BivarPoly(Rational(constant)) {}  // NOLINT

  static BivarPoly x() { return monomial(1, 1, 0); }
  static BivarPoly y() { return monomial(1, 0, 1); }
  static BivarPoly monomial(const Rational& c, std::uint32_t x_deg, std::uint32_t y_deg);

  const map_type& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::uint32_t deg_x() const;
  std::uint32_t deg_y() const;
  Rational coefficient(std::uint32_t x_deg, std::uint32_t y_deg) const;

  /// Coefficient of y^j as a dense polynomial in x (index = x-degree), j = 0..deg_y.
  std::vector<std::vector<Rational>> y_coefficients() const;

  /// (1/k!) d^k f / dy^k.
  BivarPoly taylor_coefficient(std::uint32_t k) const;

  BivarPoly pow(std::uint32_t e) const;

  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);
  BivarPoly& operator*=(const Rational& scalar);
  BivarPoly operator-() const;

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const Rational& b) { return a *= b; }
  friend BivarPoly operator*(const Rational& a, BivarPoly b) { return b *= a; }
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  map_type terms_;
};

/// Degrees above this are rejected by the parser.
inline constexpr std::uint32_t kMaxDegree = 1u << 16;

/// expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := base ('^' natural)?; base := 'x' | 'y' | rational | '(' expr ')'.
BivarPoly parse_poly(std::string_view text);

/// Terms in descending (y-degree, x-degree) order, e.g. "y^2 - x", "3/2*x^2*y + 1".
/// parse_poly(to_string(f)) == f.
std::string to_string(const BivarPoly& f);

}  // namespace valmon
