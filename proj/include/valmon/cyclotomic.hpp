#pragma once

#include <optional>
#include <span>
#include <vector>

#include "valmon/rational.hpp"

namespace valmon {

/// Dense integer polynomial, coefficient of x^k at index k.
using IntPoly = std::vector<Integer>;

unsigned euler_phi(unsigned n);

/// The n-th cyclotomic polynomial, via x^n - 1 divided by Phi_d for proper divisors d.
IntPoly cyclotomic_modulus(unsigned n);

/// An element of Q(zeta_n), stored as a residue modulo Phi_n in the power basis.
///
/// The coefficient vector always has length phi(n), so rationality is a
/// coordinate check. Mixing orders is a DomainError.
class Cyclotomic {
 public:
  /// Zero of order 1.
  Cyclotomic();
  /// Zero of the given order.
  explicit Cyclotomic(unsigned order);
  Cyclotomic(unsigned order, const Rational& value);

  /// zeta_n^power, for any power (reduced modulo n).
  static Cyclotomic zeta(unsigned order, unsigned long power = 1);

  unsigned order() const noexcept { return order_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& scalar);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_order(const Cyclotomic& other) const;

  unsigned order_;
  std::vector<Rational> coeffs_;
};

}  // namespace valmon
