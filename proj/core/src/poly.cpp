#include "vassiliev/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace vassiliev {

namespace {
const Rational kZero(0);
}

Poly::Poly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int exp, Rational coeff) {
  Poly p;
  if (coeff != 0) {
    p.coeffs_.assign(exp + 1, Rational(0));
    p.coeffs_[exp] = std::move(coeff);
  }
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

std::optional<int> Poly::ord() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return std::nullopt;
}

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rational> r(coeffs_);
  for (auto& x : r) x = -x;
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      if (o.coeffs_[j] != 0) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> r(coeffs_);
  for (auto& x : r) x *= s;
  return Poly(std::move(r));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::pow(int k) const {
  Poly r{Rational(1)};
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Poly Poly::in_ctilde() const {
  // q(x) = p(x+2), Horner in (x+2)
  Poly shift = Poly::c() + Poly(Rational(2));
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * shift + Poly(*it);
  return acc;
}

Poly Poly::from_ctilde() const {
  Poly shift = Poly::c() - Poly(Rational(2));
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * shift + Poly(*it);
  return acc;
}

Poly Poly::div_exact(const Poly& q) const {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  const int dq = *q.degree();
  std::vector<Rational> quot;
  int dr = static_cast<int>(rem.size()) - 1;
  while (dr >= 0 && rem[dr] == 0) --dr;
  if (dr < 0) return Poly();
  if (dr < dq) throw std::domain_error("polynomial division is not exact");
  quot.assign(dr - dq + 1, Rational(0));
  while (dr >= dq) {
    Rational f = rem[dr] / q.coeffs_[dq];
    quot[dr - dq] = f;
    for (int j = 0; j <= dq; ++j) rem[dr - dq + j] -= f * q.coeffs_[j];
    while (dr >= 0 && rem[dr] == 0) --dr;
  }
  if (dr >= 0) throw std::domain_error("polynomial division is not exact");
  return Poly(std::move(quot));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    const Rational& co = coeffs_[i];
    if (co == 0) continue;
    Rational a = co;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << "*";
      out << "c";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + msg);
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Rational number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    std::string num(s.substr(start, pos - start));
    if (eat('/')) {
      skip_ws();
      size_t ds = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == ds) fail("expected denominator");
      num += "/" + std::string(s.substr(ds, pos - ds));
    }
    return parse_rational(num);
  }
  int exponent() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected exponent");
    return std::stoi(std::string(s.substr(start, pos - start)));
  }

  // term := [number ['*']] ['c' ['^' int]]
  Poly term() {
    skip_ws();
    Rational coeff(1);
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = number();
      have_coeff = true;
      eat('*');
    }
    skip_ws();
    if (pos < s.size() && s[pos] == 'c') {
      ++pos;
      int e = 1;
      if (eat('^')) e = exponent();
      return Poly::monomial(e, coeff);
    }
    if (!have_coeff) fail("expected term");
    return Poly(coeff);
  }

  Poly parse() {
    skip_ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        fail("expected '+' or '-'");
      }
    }
    return acc;
  }
};

}  // namespace

Poly Poly::parse(std::string_view text) {
  Parser p{text};
  return p.parse();
}

}  // namespace vassiliev
