#include "vassiliev/weight.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "vassiliev/ops.hpp"

namespace vassiliev {

Poly wgl_chord(const Diagram& d) {
  std::map<int, int> succ;
  int m = 0;
  for (const auto& c : d.circles) {
    if (c.empty()) {
      ++m;
      continue;
    }
    for (size_t i = 0; i < c.size(); ++i) succ[c[i]] = c[(i + 1) % c.size()];
  }
  std::map<int, bool> seen;
  for (const auto& [p, _] : succ) {
    if (seen.count(p)) continue;
    ++m;
    int q = p;
    while (!seen.count(q)) {
      seen[q] = true;
      q = succ.at(d.edges.at(q));
    }
  }
  return Poly::monomial(m);
}

Poly wso_chord(const Diagram& d) {
  std::vector<std::pair<int, int>> chords;
  for (const auto& [a, b] : d.edges)
    if (a < b) chords.emplace_back(a, b);
  const int n = static_cast<int>(chords.size());
  int free_circles = 0;
  // arcs: for circle legs [p0..pm-1], arc i runs p_i -> p_{i+1}
  std::map<int, int> arc_out, arc_in;
  int arcs = 0;
  for (const auto& c : d.circles) {
    if (c.empty()) {
      ++free_circles;
      continue;
    }
    for (size_t i = 0; i < c.size(); ++i) {
      arc_out[c[i]] = arcs;
      arc_in[c[(i + 1) % c.size()]] = arcs;
      ++arcs;
    }
  }
  // flatten chord endpoints to arc indices once
  struct Ends {
    int in_p, out_p, in_q, out_q;
  };
  std::vector<Ends> ends;
  ends.reserve(n);
  for (const auto& [p, q] : chords)
    ends.push_back({arc_in.at(p), arc_out.at(p), arc_in.at(q), arc_out.at(q)});

  std::vector<int> parent(arcs);
  Poly total;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int comps = arcs;
    auto find = [&parent](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    auto unite = [&](int a, int b) {
      int ra = find(a), rb = find(b);
      if (ra != rb) {
        parent[ra] = rb;
        --comps;
      }
    };
    int sign = 1;
    for (int i = 0; i < n; ++i) {
      const Ends& e = ends[i];
      if (mask >> i & 1) {  // crossed: reverses traversal direction
        sign = -sign;
        unite(e.in_p, e.in_q);
        unite(e.out_p, e.out_q);
      } else {  // parallel
        unite(e.in_p, e.out_q);
        unite(e.in_q, e.out_p);
      }
    }
    total += Poly::monomial(comps + free_circles, Rational(sign));
  }
  return total;
}

namespace {

std::mutex memo_mutex;
std::unordered_map<std::string, Poly> memo;

Poly chord_value(const Diagram& cd, WeightFlavor flavor) {
  std::string key = (flavor == WeightFlavor::gl ? "g" : "s") + cd.key();
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Poly v = flavor == WeightFlavor::gl ? wgl_chord(cd) : wso_chord(cd);
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(std::move(key), v);
  return v;
}

Poly evaluate_checked(const Diagram& d, WeightFlavor flavor,
                      const EvalOptions& opts) {
  if (d.vertex_count() > opts.max_vertices)
    throw std::runtime_error(
        "diagram has " + std::to_string(d.vertex_count()) +
        " internal vertices, above the state-sum guard of " +
        std::to_string(opts.max_vertices));
  auto bad = validate(d);
  if (!bad.empty()) throw std::invalid_argument("invalid diagram: " + bad.front());
  DiagramCombo terms = opts.deframed ? deframe(d) : DiagramCombo(d);
  Poly total;
  for (const auto& [coef, dd] : terms.terms) {
    DiagramCombo reduced = stu_reduce(dd);
    reduced.normalize();
    for (const auto& [c2, cd] : reduced.terms)
      total += chord_value(cd, flavor) * (coef * c2);
  }
  return total;
}

}  // namespace

Poly evaluate(const Diagram& d, WeightFlavor flavor, EvalOptions opts) {
  return evaluate_checked(d, flavor, opts);
}

Poly evaluate(const DiagramCombo& combo, WeightFlavor flavor, EvalOptions opts) {
  Poly total;
  for (const auto& [coef, d] : combo.terms)
    total += evaluate_checked(d, flavor, opts) * coef;
  return total;
}

Poly wso_tilde(const Diagram& d, EvalOptions opts) {
  Poly so = evaluate(d, WeightFlavor::so, opts);
  // c(c-1)
  Poly divisor = Poly::c() * (Poly::c() - Poly(Rational(1)));
  return so.div_exact(divisor);
}

Rational functional(const Diagram& d, Functional kind, int n, int l,
                    EvalOptions opts) {
  if (d.degree() != n || d.circle_count() != l)
    throw std::invalid_argument("functional: diagram has degree " +
                                std::to_string(d.degree()) + " on " +
                                std::to_string(d.circle_count()) +
                                " circles, not (n,l)=(" + std::to_string(n) +
                                "," + std::to_string(l) + ")");
  auto ipow = [](Rational base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  switch (kind) {
    case Functional::r: {
      Poly gl = evaluate(d, WeightFlavor::gl, opts);
      return (l % 2 ? Rational(-1) : Rational(1)) * gl.eval(Rational(2));
    }
    case Functional::y: {
      Poly gl = evaluate(d, WeightFlavor::gl, opts);
      return gl.coeff(n + l);
    }
    case Functional::w: {
      Poly so = evaluate(d, WeightFlavor::so, opts);
      return ipow(Rational(-2), n) * so.eval(Rational(4)) -
             Rational(2) * ipow(Rational(-2), l) * so.eval(Rational(-2));
    }
  }
  throw std::invalid_argument("functional: unknown kind");
}

}  // namespace vassiliev
