#pragma once

#include <map>
#include <string>
#include <vector>

#include "vassiliev/poly.hpp"

namespace vassiliev {

/// A point of a Brauer diagram: strand index 1..k, on the top or bottom row.
/// Encoded as 2*(strand-1) + (bottom ? 1 : 0).
int br_point(int strand, bool bottom);

/// Perfect matching on the 2k points of Br_k, stored as sorted pairs of
/// sorted encoded points.
class BrMatching {
 public:
  BrMatching(int k, std::vector<std::pair<int, int>> pairs);

  /// From (strand,row) pairs written as e.g. {{{1,false},{2,false}}, ...}.
  static BrMatching of(int k,
                       std::vector<std::pair<std::pair<int, bool>,
                                             std::pair<int, bool>>> pairs);
  static BrMatching identity(int k);

  int strand_count() const { return k_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  bool operator==(const BrMatching& o) const {
    return k_ == o.k_ && pairs_ == o.pairs_;
  }
  bool operator<(const BrMatching& o) const { return pairs_ < o.pairs_; }

  /// "{t1-t2,b1-b2}" rendering.
  std::string str() const;

 private:
  int k_;
  std::vector<std::pair<int, int>> pairs_;
};

/// Element of the Brauer algebra Br_k over Q[c].
class BrElement {
 public:
  explicit BrElement(int k) : k_(k) {}
  BrElement(BrMatching m, Poly coeff = Poly{Rational(1)});

  static BrElement identity(int k) { return BrElement(BrMatching::identity(k)); }

  int strand_count() const { return k_; }
  const std::map<BrMatching, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BrElement operator+(const BrElement& o) const;
  BrElement operator-(const BrElement& o) const;
  BrElement operator*(const BrElement& o) const;  // br_mul
  BrElement operator*(const Poly& s) const;
  BrElement pow(int n) const;

  bool operator==(const BrElement& o) const {
    return k_ == o.k_ && terms_ == o.terms_;
  }

  /// Close strand i's top to its bottom for all i; loops become factors of c.
  Poly trace() const;

  /// "Sum of (poly)*{pairs}" rendering in canonical matching order.
  std::string str() const;

 private:
  void add_term(const BrMatching& m, const Poly& coeff);
  int k_;
  std::map<BrMatching, Poly> terms_;
};

/// The named basis diagrams: k=2 gives {"a","b","1"}; k=3 gives
/// {"u+","u-","x+","x-","d","e","f","g","h","1"} (with u+ = d). The Br3
/// matchings are pinned by the algebra identities they must satisfy, not by
/// any picture convention.
std::map<std::string, BrElement> named_elements(int k);

/// Expression grammar over the named elements: +, -, scalar polynomials in
/// c, juxtaposition or * for products, ^ for powers, parentheses.
/// Throws std::invalid_argument with a position on syntax errors.
BrElement br_parse(std::string_view text, int k);

}  // namespace vassiliev
