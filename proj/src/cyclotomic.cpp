#include "valmon/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "valmon/error.hpp"

namespace valmon {

unsigned euler_phi(unsigned n) {
  if (n == 0) throw DomainError("euler_phi(0)");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of a by a monic divisor b; throws if the remainder is nonzero.
IntPoly exact_divide(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw DomainError("exact_divide: degree too small");
  IntPoly q(a.size() - db, Integer(0));
  for (std::size_t k = a.size(); k-- > db;) {
    const Integer c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  for (std::size_t k = 0; k < db; ++k)
    if (a[k] != 0) throw DomainError("exact_divide: nonzero remainder");
  return q;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::mutex cache_mutex;
std::map<unsigned, IntPoly> cache;

}  // namespace

IntPoly cyclotomic_modulus(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic_modulus(0)");
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly numerator(n + 1, Integer(0));
  numerator[0] = -1;
  numerator[n] = 1;
  IntPoly divisor{Integer(1)};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) divisor = multiply(divisor, cyclotomic_modulus(d));
  IntPoly result = exact_divide(std::move(numerator), divisor);
  std::lock_guard lock(cache_mutex);
  cache.emplace(n, result);
  return result;
}

namespace {

// Reduce a dense rational polynomial modulo the monic Phi_n into phi(n) coordinates.
std::vector<Rational> reduce_mod(std::vector<Rational> raw, const IntPoly& modulus) {
  const std::size_t deg = modulus.size() - 1;
  for (std::size_t k = raw.size(); k-- > deg;) {
    if (raw[k] == 0) continue;
    const Rational c = raw[k];
    for (std::size_t j = 0; j <= deg; ++j) raw[k - deg + j] -= c * modulus[j];
  }
  raw.resize(deg, Rational(0));
  return raw;
}

}  // namespace

Cyclotomic::Cyclotomic() : Cyclotomic(1) {}

Cyclotomic::Cyclotomic(unsigned order) : order_(order), coeffs_(euler_phi(order), Rational(0)) {}

Cyclotomic::Cyclotomic(unsigned order, const Rational& value) : Cyclotomic(order) {
  coeffs_[0] = value;
}

Cyclotomic Cyclotomic::zeta(unsigned order, unsigned long power) {
  if (order == 0) throw DomainError("zeta of order 0");
  const std::size_t k = power % order;
  std::vector<Rational> raw(k + 1, Rational(0));
  raw[k] = 1;
  Cyclotomic out(order);
  out.coeffs_ = reduce_mod(std::move(raw), cyclotomic_modulus(order));
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return std::nullopt;
  return coeffs_[0];
}

void Cyclotomic::check_order(const Cyclotomic& other) const {
  if (order_ != other.order_)
    throw DomainError("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                      std::to_string(other.order_));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  check_order(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  check_order(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_order(b);
  const std::size_t n = a.coeffs_.size();
  if (n == 1) return Cyclotomic(a.order_, a.coeffs_[0] * b.coeffs_[0]);
  std::vector<Rational> raw(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b.coeffs_[j] != 0) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  Cyclotomic out(a.order_);
  out.coeffs_ = reduce_mod(std::move(raw), cyclotomic_modulus(a.order_));
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) { return *this = *this * other; }

Cyclotomic& Cyclotomic::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

}  // namespace valmon
