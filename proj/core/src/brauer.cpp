#include "vassiliev/brauer.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vassiliev {

int br_point(int strand, bool bottom) { return 2 * (strand - 1) + (bottom ? 1 : 0); }

namespace {

std::string point_str(int p) {
  return std::string(p % 2 ? "b" : "t") + std::to_string(p / 2 + 1);
}

}  // namespace

BrMatching::BrMatching(int k, std::vector<std::pair<int, int>> pairs)
    : k_(k), pairs_(std::move(pairs)) {
  if (static_cast<int>(pairs_.size()) != k_)
    throw std::invalid_argument("BrMatching: expected " + std::to_string(k_) +
                                " pairs");
  std::vector<int> seen(2 * k_, 0);
  for (auto& [a, b] : pairs_) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= 2 * k_ || a == b)
      throw std::invalid_argument("BrMatching: bad point pair");
    ++seen[a];
    ++seen[b];
  }
  for (int c : seen)
    if (c != 1) throw std::invalid_argument("BrMatching: not a perfect matching");
  std::sort(pairs_.begin(), pairs_.end());
}

BrMatching BrMatching::of(
    int k,
    std::vector<std::pair<std::pair<int, bool>, std::pair<int, bool>>> pairs) {
  std::vector<std::pair<int, int>> enc;
  for (const auto& [a, b] : pairs)
    enc.emplace_back(br_point(a.first, a.second), br_point(b.first, b.second));
  return BrMatching(k, std::move(enc));
}

BrMatching BrMatching::identity(int k) {
  std::vector<std::pair<int, int>> enc;
  for (int i = 1; i <= k; ++i)
    enc.emplace_back(br_point(i, false), br_point(i, true));
  return BrMatching(k, std::move(enc));
}

std::string BrMatching::str() const {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out << ",";
    out << point_str(pairs_[i].first) << "-" << point_str(pairs_[i].second);
  }
  out << "}";
  return out.str();
}

BrElement::BrElement(BrMatching m, Poly coeff) : k_(m.strand_count()) {
  add_term(m, coeff);
}

void BrElement::add_term(const BrMatching& m, const Poly& coeff) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

BrElement BrElement::operator+(const BrElement& o) const {
  if (k_ != o.k_) throw std::invalid_argument("Brauer strand-count mismatch");
  BrElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

BrElement BrElement::operator-(const BrElement& o) const {
  return *this + (o * Poly(Rational(-1)));
}

BrElement BrElement::operator*(const Poly& s) const {
  BrElement r(k_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

namespace {

// Stack ma over mb, glue ma's bottom row to mb's top row; returns the induced
// matching and the number of closed loops.
std::pair<BrMatching, int> mul_basis(int k, const BrMatching& ma,
                                     const BrMatching& mb) {
  // nodes: 0..k-1 = a-top strands, k..2k-1 = mid, 2k..3k-1 = b-bottom
  std::vector<int> parent(3 * k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[ra] = rb;
  };
  auto a_node = [k](int p) { return p % 2 ? k + p / 2 : p / 2; };
  auto b_node = [k](int p) { return p % 2 ? 2 * k + p / 2 : k + p / 2; };
  for (const auto& [x, y] : ma.pairs()) unite(a_node(x), a_node(y));
  for (const auto& [x, y] : mb.pairs()) unite(b_node(x), b_node(y));
  // pair up the 2k outer endpoints by component
  std::vector<std::pair<int, int>> comp_end;  // (root, encoded point)
  for (int i = 0; i < k; ++i) {
    comp_end.emplace_back(find(i), br_point(i + 1, false));
    comp_end.emplace_back(find(2 * k + i), br_point(i + 1, true));
  }
  std::sort(comp_end.begin(), comp_end.end());
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> end_roots;
  for (size_t i = 0; i < comp_end.size(); i += 2) {
    pairs.emplace_back(comp_end[i].second, comp_end[i + 1].second);
    end_roots.push_back(comp_end[i].first);
  }
  // closed loops = mid-only components
  int loops = 0;
  std::vector<int> mid_roots;
  for (int i = 0; i < k; ++i) mid_roots.push_back(find(k + i));
  std::sort(mid_roots.begin(), mid_roots.end());
  mid_roots.erase(std::unique(mid_roots.begin(), mid_roots.end()),
                  mid_roots.end());
  for (int r : mid_roots)
    if (!std::binary_search(end_roots.begin(), end_roots.end(), r)) ++loops;
  return {BrMatching(k, std::move(pairs)), loops};
}

}  // namespace

BrElement BrElement::operator*(const BrElement& o) const {
  if (k_ != o.k_) throw std::invalid_argument("Brauer strand-count mismatch");
  BrElement r(k_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      auto [nm, loops] = mul_basis(k_, ma, mb);
      r.add_term(nm, ca * cb * Poly::monomial(loops));
    }
  return r;
}

BrElement BrElement::pow(int n) const {
  BrElement r = identity(k_);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

Poly BrElement::trace() const {
  Poly t;
  for (const auto& [m, c] : terms_) {
    std::vector<int> parent(2 * k_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    auto unite = [&](int a, int b) {
      int ra = find(a), rb = find(b);
      if (ra != rb) parent[ra] = rb;
    };
    for (const auto& [a, b] : m.pairs()) unite(a, b);
    for (int i = 1; i <= k_; ++i) unite(br_point(i, false), br_point(i, true));
    std::vector<int> roots;
    for (int p = 0; p < 2 * k_; ++p) roots.push_back(find(p));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    t += c * Poly::monomial(static_cast<int>(roots.size()));
  }
  return t;
}

std::string BrElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")*" << m.str();
  }
  return out.str();
}

std::map<std::string, BrElement> named_elements(int k) {
  using P = std::pair<int, bool>;
  auto el = [k](std::vector<std::pair<P, P>> pairs) {
    return BrElement(BrMatching::of(k, std::move(pairs)));
  };
  const P t1{1, false}, t2{2, false}, t3{3, false};
  const P b1{1, true}, b2{2, true}, b3{3, true};
  if (k == 2) {
    return {
        {"a", el({{t1, t2}, {b1, b2}})},
        {"b", el({{t1, b2}, {t2, b1}})},
        {"1", BrElement::identity(2)},
    };
  }
  if (k == 3) {
    // pinned by the printed algebra identities (see tests); u+ = d
    BrElement d = el({{t1, b1}, {t2, t3}, {b2, b3}});
    return {
        {"u+", d},
        {"u-", el({{t1, t3}, {t2, b1}, {b2, b3}})},
        {"x+", el({{t1, b3}, {t2, b1}, {t3, b2}})},
        {"x-", el({{t1, b1}, {t2, b3}, {t3, b2}})},
        {"d", d},
        {"e", el({{t1, t2}, {b1, b2}, {t3, b3}})},
        {"f", el({{t1, b3}, {t2, t3}, {b1, b2}})},
        {"g", el({{t1, t2}, {t3, b1}, {b2, b3}})},
        {"h", el({{t1, b3}, {t2, b2}, {t3, b1}})},
        {"1", BrElement::identity(3)},
    };
  }
  throw std::invalid_argument("named_elements: only k = 2 and 3 are defined");
}

namespace {

struct BrParser {
  std::string_view s;
  size_t pos = 0;
  int k;
  std::map<std::string, BrElement> names;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("expression error at position " +
                                std::to_string(pos) + ": " + msg);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoi(std::string(s.substr(start, pos - start)));
  }

  BrElement scalar(const Poly& p) { return BrElement::identity(k) * p; }

  // primary := name | number | 'c' | '(' expr ')'
  // A '+' or '-' immediately after 'u' or 'x' (no space) is part of the name.
  BrElement primary() {
    skip_ws();
    if (pos >= s.size()) fail("expected operand");
    char ch = s[pos];
    if (ch == '(') {
      ++pos;
      BrElement e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      int num = integer();
      if (eat('/')) return scalar(Poly(Rational(num) / Rational(integer())));
      return scalar(Poly(Rational(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '1') {
      std::string name(1, ch);
      ++pos;
      if ((name == "u" || name == "x") && pos < s.size() &&
          (s[pos] == '+' || s[pos] == '-')) {
        name += s[pos];
        ++pos;
      }
      if (name == "c") return scalar(Poly::c());
      auto it = names.find(name);
      if (it == names.end()) fail("unknown element '" + name + "'");
      return it->second;
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  BrElement power() {
    BrElement e = primary();
    while (eat('^')) e = e.pow(integer());
    return e;
  }

  BrElement product() {
    BrElement e = power();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        e = e * power();
        continue;
      }
      // juxtaposition: another operand follows directly
      if (pos < s.size() &&
          (s[pos] == '(' || std::isalnum(static_cast<unsigned char>(s[pos])))) {
        e = e * power();
        continue;
      }
      return e;
    }
  }

  BrElement expr() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    BrElement e = product();
    if (neg) e = e * Poly(Rational(-1));
    for (;;) {
      skip_ws();
      if (pos >= s.size() || s[pos] == ')') return e;
      if (eat('+')) {
        e = e + product();
      } else if (eat('-')) {
        e = e - product();
      } else {
        fail("expected '+', '-' or end of expression");
      }
    }
  }
};

}  // namespace

BrElement br_parse(std::string_view text, int k) {
  BrParser p{text, 0, k, named_elements(k)};
  BrElement e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

}  // namespace vassiliev
