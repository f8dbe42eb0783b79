#include "vassiliev/diagram.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace vassiliev {

Diagram::Diagram(std::vector<std::vector<int>> circles_,
                 std::vector<std::array<int, 3>> vertices_,
                 std::map<int, int> half_edges)
    : circles(std::move(circles_)), vertices(std::move(vertices_)) {
  for (const auto& [a, b] : half_edges) {
    edges[a] = b;
    edges[b] = a;
  }
}

int Diagram::leg_count() const {
  int n = 0;
  for (const auto& c : circles) n += static_cast<int>(c.size());
  return n;
}

int Diagram::fresh_id() const {
  int m = 0;
  for (const auto& c : circles)
    for (int p : c) m = std::max(m, p);
  for (const auto& v : vertices)
    for (int p : v) m = std::max(m, p);
  return m + 1;
}

std::string Diagram::key() const {
  std::map<int, int> lab;
  auto label = [&lab](int p) {
    auto [it, inserted] = lab.emplace(p, static_cast<int>(lab.size()));
    return it->second;
  };
  std::ostringstream out;
  out << "C";
  for (const auto& c : circles) {
    out << "(";
    for (int p : c) out << label(p) << ",";
    out << ")";
  }
  std::vector<std::array<int, 3>> vs;
  for (const auto& v : vertices) {
    std::array<int, 3> t{label(v[0]), label(v[1]), label(v[2])};
    int m = 0;
    for (int i = 1; i < 3; ++i)
      if (t[i] < t[m]) m = i;
    vs.push_back({t[m], t[(m + 1) % 3], t[(m + 2) % 3]});
  }
  std::sort(vs.begin(), vs.end());
  out << "V";
  for (const auto& v : vs) out << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
  std::vector<std::pair<int, int>> ed;
  for (const auto& [a, b] : edges)
    if (a < b) {
      int la = lab.at(a), lb = lab.at(b);
      ed.emplace_back(std::min(la, lb), std::max(la, lb));
    }
  std::sort(ed.begin(), ed.end());
  out << "E";
  for (const auto& [a, b] : ed) out << "(" << a << "," << b << ")";
  return out.str();
}

DiagramCombo& DiagramCombo::add(Rational coeff, Diagram d) {
  terms.emplace_back(std::move(coeff), std::move(d));
  return *this;
}

void DiagramCombo::normalize() {
  std::vector<std::pair<std::string, size_t>> keyed;
  keyed.reserve(terms.size());
  for (size_t i = 0; i < terms.size(); ++i) keyed.emplace_back(terms[i].second.key(), i);
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Rational, Diagram>> merged;
  for (size_t i = 0; i < keyed.size();) {
    size_t j = i;
    Rational c(0);
    while (j < keyed.size() && keyed[j].first == keyed[i].first) {
      c += terms[keyed[j].second].first;
      ++j;
    }
    if (c != 0) merged.emplace_back(std::move(c), terms[keyed[i].second].second);
    i = j;
  }
  terms = std::move(merged);
}

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> bad;
  std::map<int, int> seen;
  for (const auto& c : d.circles)
    for (int p : c) ++seen[p];
  for (const auto& v : d.vertices)
    for (int p : v) ++seen[p];
  for (const auto& [p, cnt] : seen)
    if (cnt != 1)
      bad.push_back("id " + std::to_string(p) + " appears " + std::to_string(cnt) +
                    " times among circles/vertices");
  for (const auto& [p, cnt] : seen) {
    auto it = d.edges.find(p);
    if (it == d.edges.end()) {
      bad.push_back("id " + std::to_string(p) + " unmatched in edges");
    } else if (d.edges.count(it->second) == 0 || d.edges.at(it->second) != p) {
      bad.push_back("edges not an involution at id " + std::to_string(p));
    }
  }
  for (const auto& [a, b] : d.edges) {
    if (!seen.count(a))
      bad.push_back("edge endpoint " + std::to_string(a) + " not placed");
    if (a == b) bad.push_back("edge joins id " + std::to_string(a) + " to itself");
  }
  if ((d.leg_count() + d.vertex_count()) % 2 != 0)
    bad.push_back("odd total vertex count (#legs + #internal vertices)");

  // every connected component must contain a circle
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    parent.emplace(x, x);
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
  for (const auto& c : d.circles)
    for (size_t i = 1; i < c.size(); ++i) unite(c[0], c[i]);
  for (const auto& v : d.vertices) {
    unite(v[0], v[1]);
    unite(v[0], v[2]);
  }
  for (const auto& [a, b] : d.edges)
    if (seen.count(a) && seen.count(b)) unite(a, b);
  std::set<int> circle_roots;
  for (const auto& c : d.circles)
    for (int p : c) circle_roots.insert(find(p));
  for (const auto& v : d.vertices)
    if (!circle_roots.count(find(v[0])))
      bad.push_back("component of vertex port " + std::to_string(v[0]) +
                    " touches no circle");
  return bad;
}

}  // namespace vassiliev
