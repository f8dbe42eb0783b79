#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vassiliev/rational.hpp"

namespace vassiliev {

/// Univariate polynomial over Q in the variable c.
///
/// Dense coefficient vector indexed by exponent, trailing zeros trimmed.
/// All arithmetic is exact.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational constant);
  Poly(std::vector<Rational> coeffs);

  /// coeff * c^exp
  static Poly monomial(int exp, Rational coeff = Rational(1));
  /// The variable c.
  static Poly c() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Highest exponent with nonzero coefficient; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  /// Lowest exponent with nonzero coefficient; nullopt for the zero polynomial.
  std::optional<int> ord() const;
  /// Coefficient of c^i (zero outside the stored range).
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rational eval(const Rational& x) const;
  Poly pow(int k) const;

  /// Coefficients of this polynomial rewritten in powers of c~ = c-2,
  /// i.e. returns q with q(x) = p(x+2).
  Poly in_ctilde() const;
  /// Inverse of in_ctilde: returns q with q(x) = p(x-2).
  Poly from_ctilde() const;

  /// Exact division; throws std::domain_error if q is zero or does not divide.
  Poly div_exact(const Poly& q) const;

  /// Text form in descending powers, e.g. "2*c^3 - 2*c", "1/2*c^2 + 1".
  std::string str() const;
  static Poly parse(std::string_view text);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// A (W_gl, W_so) value pair.
struct PairedPoly {
  Poly gl;
  Poly so;
};

}  // namespace vassiliev
