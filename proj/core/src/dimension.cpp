#include "vassiliev/dimension.hpp"

#include <chrono>
#include <stdexcept>

namespace vassiliev {

namespace {

// all ways to pair up the points, emitted as (a,b) lists
void pairings(std::vector<int>& points,
              std::vector<std::pair<int, int>>& acc,
              const std::function<void(const std::vector<std::pair<int, int>>&)>& sink) {
  if (points.empty()) {
    sink(acc);
    return;
  }
  int a = points.front();
  for (size_t i = 1; i < points.size(); ++i) {
    int b = points[i];
    std::vector<int> rest;
    rest.reserve(points.size() - 2);
    for (size_t j = 1; j < points.size(); ++j)
      if (j != i) rest.push_back(points[j]);
    acc.emplace_back(a, b);
    pairings(rest, acc, sink);
    acc.pop_back();
  }
}

void compositions(int total, int parts, std::vector<int>& acc,
                  const std::function<void(const std::vector<int>&)>& sink) {
  if (parts == 1) {
    acc.push_back(total);
    sink(acc);
    acc.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    acc.push_back(first);
    compositions(total - first, parts - 1, acc, sink);
    acc.pop_back();
  }
}

}  // namespace

void enumerate_chords(int n, int l,
                      const std::function<void(const Diagram&)>& sink,
                      EnumOptions opts) {
  if (n < 0 || l < 1) throw std::invalid_argument("enumerate_chords: n >= 0, l >= 1");
  if (!opts.override_guard && (n > opts.max_n || l > opts.max_l))
    throw std::invalid_argument(
        "enumerate_chords: (n,l)=(" + std::to_string(n) + "," +
        std::to_string(l) + ") exceeds the enumeration guard");
  std::vector<int> points(2 * n);
  for (int i = 0; i < 2 * n; ++i) points[i] = i;
  std::vector<int> comp_acc;
  compositions(2 * n, l, comp_acc, [&](const std::vector<int>& comp) {
    std::vector<std::vector<int>> circles;
    int idx = 0;
    for (int sz : comp) {
      circles.emplace_back(points.begin() + idx, points.begin() + idx + sz);
      idx += sz;
    }
    std::vector<std::pair<int, int>> pair_acc;
    std::vector<int> pts = points;
    pairings(pts, pair_acc, [&](const std::vector<std::pair<int, int>>& pr) {
      Diagram d;
      d.circles = circles;
      for (const auto& [a, b] : pr) {
        d.edges[a] = b;
        d.edges[b] = a;
      }
      sink(d);
    });
  });
}

long count_chords(int n, int l, EnumOptions opts) {
  long count = 0;
  enumerate_chords(n, l, [&count](const Diagram&) { ++count; }, opts);
  return count;
}

DimReport dims(int n, int l, EnumOptions opts) {
  auto start = std::chrono::steady_clock::now();
  DimReport rep;
  rep.n = n;
  rep.l = l;
  QMatrix gl_m, so_m, both_m;
  const int ncol = n + l;  // coefficients of c^1..c^(n+l)
  enumerate_chords(n, l, [&](const Diagram& d) {
    ++rep.diagram_count;
    Poly g = evaluate(d, WeightFlavor::gl);
    Poly s = evaluate(d, WeightFlavor::so);
    std::vector<Rational> gr, sr, br;
    for (int i = 1; i <= ncol; ++i) gr.push_back(g.coeff(i));
    for (int i = 1; i <= ncol; ++i) sr.push_back(s.coeff(i));
    br = gr;
    br.insert(br.end(), sr.begin(), sr.end());
    gl_m.add_row(std::move(gr));
    so_m.add_row(std::move(sr));
    both_m.add_row(std::move(br));
  }, opts);
  rep.dim_H = gl_m.rank();
  rep.dim_F = so_m.rank();
  rep.dim_sum = both_m.rank();
  rep.dim_cap = rep.dim_H + rep.dim_F - rep.dim_sum;
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

int expected_dim_H(int n, int l) { return std::min(n, (n - 1 + l) / 2); }

int expected_dim_F(int n, int l) {
  if (n == 1) return l == 1 ? 0 : 1;
  if (n == 2) return l == 1 ? 1 : (l == 2 ? 2 : 3);
  if (n == 3) return l == 1 ? 1 : (l == 2 ? 4 : 5);
  if (l == 1) return n - 1;
  if (n <= l) return 2 * n - 1;
  return n + l - 1;
}

int expected_dim_cap(int n, int l) { return std::min(expected_dim_H(n, l), 2); }

RankReport rank_of(const std::string& label,
                   const std::vector<std::pair<std::string, DiagramCombo>>& list,
                   Projection proj, EvalOptions eopts) {
  RankReport rep;
  rep.label = label;
  for (const auto& [name, combo] : list) {
    rep.elements.push_back(name);
    rep.values.push_back(evaluate_pair(combo, eopts));
  }
  rep.rank = span_dim(rep.values, proj);
  return rep;
}

}  // namespace vassiliev
