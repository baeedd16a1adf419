#include "valmon/bipoly.hpp"

#include <cctype>
#include <limits>

#include "valmon/error.hpp"

namespace valmon {

BivarPoly::BivarPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

BivarPoly BivarPoly::monomial(const Rational& c, std::uint32_t x_deg, std::uint32_t y_deg) {
  BivarPoly out;
  if (c != 0) out.terms_.emplace(Monomial{x_deg, y_deg}, c);
  return out;
}

std::uint32_t BivarPoly::deg_x() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x);
  return d;
}

std::uint32_t BivarPoly::deg_y() const { return terms_.empty() ? 0 : terms_.rbegin()->first.y; }

Rational BivarPoly::coefficient(std::uint32_t x_deg, std::uint32_t y_deg) const {
  auto it = terms_.find(Monomial{x_deg, y_deg});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::vector<Rational>> BivarPoly::y_coefficients() const {
  std::vector<std::vector<Rational>> out(deg_y() + 1);
  for (const auto& [m, c] : terms_) {
    auto& row = out[m.y];
    if (row.size() <= m.x) row.resize(m.x + 1, Rational(0));
    row[m.x] = c;
  }
  return out;
}

BivarPoly BivarPoly::taylor_coefficient(std::uint32_t k) const {
  BivarPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.y < k) continue;
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), m.y, k);
    out.terms_.emplace(Monomial{m.x, m.y - k}, c * binom);
  }
  return out;
}

void BivarPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(Monomial{ma.x + mb.x, ma.y + mb.y}, ca * cb);
  return out;
}

BivarPoly BivarPoly::pow(std::uint32_t e) const {
  BivarPoly result(1);
  BivarPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BivarPoly parse() {
    BivarPoly f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  BivarPoly expr() {
    bool negate = accept('-');
    BivarPoly result = term();
    if (negate) result = -result;
    while (true) {
      if (accept('+')) {
        result += term();
      } else if (accept('-')) {
        result -= term();
      } else {
        return result;
      }
    }
  }

  BivarPoly term() {
    BivarPoly result = factor();
    while (accept('*')) result = result * factor();
    return result;
  }

  BivarPoly factor() {
    BivarPoly b = base();
    if (!accept('^')) return b;
    skip_space();
    const std::size_t start = pos_;
    Integer e = digits();
    if (!e.fits_uint_p() || e > kMaxDegree) {
      pos_ = start;
      fail("exponent overflow");
    }
    const auto exp = static_cast<std::uint32_t>(e.get_ui());
    if (static_cast<std::uint64_t>(b.deg_x()) * exp > kMaxDegree ||
        static_cast<std::uint64_t>(b.deg_y()) * exp > kMaxDegree) {
      pos_ = start;
      fail("exponent overflow");
    }
    return b.pow(exp);
  }

  BivarPoly base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == 'x' || ch == 'y') {
      ++pos_;
      return ch == 'x' ? BivarPoly::x() : BivarPoly::y();
    }
    if (ch == '(') {
      ++pos_;
      BivarPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = digits();
      Integer den = 1;
      if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        den = digits();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return BivarPoly(q);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string power(char var, std::uint32_t e) {
  if (e == 0) return "";
  std::string out(1, var);
  if (e > 1) out += "^" + std::to_string(e);
  return out;
}

}  // namespace

BivarPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const BivarPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    std::string vars = power('x', m.x);
    if (m.y > 0) vars += (vars.empty() ? "" : "*") + power('y', m.y);
    if (vars.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += to_string(mag) + "*" + vars;
    }
  }
  return out;
}

}  // namespace valmon
