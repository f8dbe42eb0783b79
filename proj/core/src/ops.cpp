#include "vassiliev/ops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace vassiliev {

namespace {

// union-find over arbitrary int ids
struct UF {
  std::map<int, int> parent;
  int find(int x) {
    parent.emplace(x, x);
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[ra] = rb;
  }
};

}  // namespace

Diagram disjoint_union(const Diagram& d, int extra_circles) {
  Diagram d2 = d;
  for (int i = 0; i < extra_circles; ++i) d2.circles.emplace_back();
  return d2;
}

Diagram relabel(const Diagram& d, int offset) {
  Diagram d2;
  for (const auto& c : d.circles) {
    std::vector<int> c2;
    for (int p : c) c2.push_back(p + offset);
    d2.circles.push_back(std::move(c2));
  }
  for (const auto& v : d.vertices)
    d2.vertices.push_back({v[0] + offset, v[1] + offset, v[2] + offset});
  for (const auto& [a, b] : d.edges) d2.edges[a + offset] = b + offset;
  return d2;
}

Diagram connected_sum(const Diagram& d1, int circle1, const Diagram& d2,
                      int circle2) {
  if (circle1 < 0 || circle1 >= d1.circle_count() || circle2 < 0 ||
      circle2 >= d2.circle_count())
    throw std::out_of_range("connected_sum: circle index out of range");
  Diagram d2r = relabel(d2, d1.fresh_id() + 10);
  // cut each circle after its last leg, splice respecting orientation
  std::vector<int> merged = d1.circles[circle1];
  merged.insert(merged.end(), d2r.circles[circle2].begin(),
                d2r.circles[circle2].end());
  Diagram out;
  out.circles.push_back(std::move(merged));
  for (int i = 0; i < d1.circle_count(); ++i)
    if (i != circle1) out.circles.push_back(d1.circles[i]);
  for (int i = 0; i < d2r.circle_count(); ++i)
    if (i != circle2) out.circles.push_back(d2r.circles[i]);
  out.vertices = d1.vertices;
  out.vertices.insert(out.vertices.end(), d2r.vertices.begin(), d2r.vertices.end());
  out.edges = d1.edges;
  out.edges.insert(d2r.edges.begin(), d2r.edges.end());
  return out;
}

DiagramCombo deframe(const Diagram& d) {
  std::set<int> vertex_ports;
  for (const auto& v : d.vertices)
    for (int p : v) vertex_ports.insert(p);
  // components of D minus the circles (matching edges + vertex triples)
  UF uf;
  for (const auto& v : d.vertices) {
    uf.unite(v[0], v[1]);
    uf.unite(v[0], v[2]);
  }
  for (const auto& [a, b] : d.edges) uf.unite(a, b);
  std::set<int> comp_with_vertex;
  for (const auto& v : d.vertices) comp_with_vertex.insert(uf.find(v[0]));
  std::vector<std::pair<int, int>> chords;
  for (const auto& [a, b] : d.edges)
    if (a < b && !vertex_ports.count(a) && !vertex_ports.count(b) &&
        !comp_with_vertex.count(uf.find(a)))
      chords.emplace_back(a, b);

  DiagramCombo combo(d);
  for (const auto& [p, q] : chords) {
    DiagramCombo next;
    for (const auto& [coef, dd] : combo.terms) {
      next.add(coef, dd);
      for (auto [keep, drop] : {std::pair{p, q}, std::pair{q, p}}) {
        Diagram d2 = dd;
        int nid = d2.fresh_id();
        int p1 = nid, p2 = nid + 1;
        for (auto& c : d2.circles) {
          auto it = std::find(c.begin(), c.end(), keep);
          if (it != c.end()) {
            size_t i = it - c.begin();
            c[i] = p1;
            c.insert(c.begin() + i + 1, p2);
          }
          auto jt = std::find(c.begin(), c.end(), drop);
          if (jt != c.end()) c.erase(jt);
        }
        d2.edges.erase(keep);
        d2.edges.erase(drop);
        d2.edges[p1] = p2;
        d2.edges[p2] = p1;
        next.add(coef * Rational(-1, 2), std::move(d2));
      }
    }
    combo = std::move(next);
  }
  return combo;
}

namespace {

// One STU step: resolve an internal vertex joined to a circle leg.
// Returns false if d is already a chord diagram; otherwise fills plus/minus.
bool stu_once(const Diagram& d, Diagram& plus, Diagram& minus) {
  std::map<int, std::pair<int, int>> legpos;  // leg -> (circle, index)
  for (int ci = 0; ci < d.circle_count(); ++ci)
    for (size_t i = 0; i < d.circles[ci].size(); ++i)
      legpos[d.circles[ci][i]] = {ci, static_cast<int>(i)};
  for (int vi = 0; vi < d.vertex_count(); ++vi) {
    const auto& v = d.vertices[vi];
    for (int r = 0; r < 3; ++r) {
      int port = v[r];
      int far = d.edges.at(port);
      auto lp = legpos.find(far);
      if (lp == legpos.end()) continue;
      // cyclic order at v: (edge-to-circle, x, y)
      int x = v[(r + 1) % 3], y = v[(r + 2) % 3];
      auto [ci, i] = lp->second;
      auto resolve = [&](bool cross) {
        Diagram d2 = d;
        int nid = d2.fresh_id();
        int p1 = nid, p2 = nid + 1;
        auto& c2 = d2.circles[ci];
        c2[i] = p1;
        c2.insert(c2.begin() + i + 1, p2);
        d2.vertices.erase(d2.vertices.begin() + vi);
        int xf = d2.edges.at(x), yf = d2.edges.at(y);
        for (int t : {port, far, x, y, xf, yf}) d2.edges.erase(t);
        // the parallel (+) term joins p1 to y's far end and p2 to x's far
        // end; this orientation is pinned by the printed wheel values
        int a = cross ? xf : yf;
        int b = cross ? yf : xf;
        if (xf == y) {  // x and y joined to each other directly
          d2.edges[p1] = p2;
          d2.edges[p2] = p1;
        } else {
          d2.edges[p1] = a;
          d2.edges[a] = p1;
          d2.edges[p2] = b;
          d2.edges[b] = p2;
        }
        return d2;
      };
      plus = resolve(false);
      minus = resolve(true);
      return true;
    }
  }
  return false;
}

}  // namespace

DiagramCombo stu_reduce(const Diagram& d) {
  std::vector<std::pair<Rational, Diagram>> stack{{Rational(1), d}};
  DiagramCombo done;
  while (!stack.empty()) {
    auto [coef, dd] = std::move(stack.back());
    stack.pop_back();
    Diagram plus, minus;
    if (!stu_once(dd, plus, minus)) {
      done.add(std::move(coef), std::move(dd));
    } else {
      stack.emplace_back(coef, std::move(plus));
      stack.emplace_back(-coef, std::move(minus));
    }
  }
  return done;
}

namespace {

Diagram remove_vertex(const Diagram& d, int vi, std::array<int, 3>& far) {
  Diagram d2 = d;
  const auto v = d2.vertices[vi];
  for (int i = 0; i < 3; ++i) far[i] = d2.edges.at(v[i]);
  d2.vertices.erase(d2.vertices.begin() + vi);
  for (int p : v) d2.edges.erase(p);
  return d2;
}

void link(Diagram& d, int a, int b) {
  d.edges[a] = b;
  d.edges[b] = a;
}

Diagram insert_t_impl(const Diagram& d, int vi) {
  std::array<int, 3> far{};
  Diagram d2 = remove_vertex(d, vi, far);
  int nid = d2.fresh_id();
  int ext[3], rgt[3], lft[3];
  for (int i = 0; i < 3; ++i) {
    ext[i] = nid + i;
    rgt[i] = nid + 3 + i;
    lft[i] = nid + 6 + i;
  }
  for (int i = 0; i < 3; ++i) {
    d2.vertices.push_back({ext[i], rgt[i], lft[i]});
    link(d2, rgt[i], lft[(i + 1) % 3]);
    link(d2, ext[i], far[i]);
  }
  return d2;
}

Diagram insert_x3_impl(const Diagram& d, int vi) {
  std::array<int, 3> far{};
  Diagram d2 = remove_vertex(d, vi, far);
  int n = d2.fresh_id();
  auto nv = [&n] { return n++; };
  int e1 = nv(), e2 = nv(), e3 = nv();
  int v1r = nv(), v1g = nv();  // v1: rail to v3, rung to m1
  int v2r = nv(), v2g = nv();
  int v3a = nv(), v3b = nv(), v3c = nv();  // to v1, to m2, to v5
  int v4a = nv(), v4b = nv(), v4c = nv();
  int v5a = nv(), v5b = nv();
  int m1a = nv(), m1b = nv(), m1x = nv();  // to v1, to v2, crossbar
  int m2a = nv(), m2b = nv(), m2x = nv();
  link(d2, v1r, v3a);
  link(d2, v2r, v4a);
  link(d2, v1g, m1a);
  link(d2, v2g, m1b);
  link(d2, v3b, m2a);
  link(d2, v4b, m2b);
  link(d2, m1x, m2x);
  link(d2, v3c, v5a);
  link(d2, v4c, v5b);
  link(d2, e1, far[0]);
  link(d2, e2, far[1]);
  link(d2, e3, far[2]);
  // cyclic orders pinned (with the reversed orientation) by the printed
  // scaling factor on omega_4
  auto tri = [&d2](int a, int b, int c) { d2.vertices.push_back({a, c, b}); };
  tri(e1, v1r, v1g);
  tri(e2, v2g, v2r);
  tri(v3a, v3b, v3c);
  tri(v4a, v4c, v4b);
  tri(e3, v5b, v5a);
  tri(m1a, m1x, m1b);
  tri(m2a, m2b, m2x);
  return d2;
}

}  // namespace

Diagram insert_template(const Diagram& d, int vi, Template tmpl) {
  if (vi < 0 || vi >= d.vertex_count())
    throw std::out_of_range("insert_template: vertex index out of range");
  return tmpl == Template::t ? insert_t_impl(d, vi) : insert_x3_impl(d, vi);
}

Diagram flip_vertex(const Diagram& d, int vi) {
  if (vi < 0 || vi >= d.vertex_count())
    throw std::out_of_range("flip_vertex: vertex index out of range");
  Diagram d2 = d;
  std::swap(d2.vertices[vi][1], d2.vertices[vi][2]);
  return d2;
}

}  // namespace vassiliev
