#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vassiliev/rational.hpp"

namespace vassiliev {

/// Trivalent diagram on oriented circles.
///
/// circles: each a cyclic (counterclockwise) sequence of leg ids.
/// vertices: internal trivalent vertices, each a cyclic triple of port ids.
/// edges: involution pairing every leg/port with its partner.
/// A diagram with no internal vertices is a chord diagram.
struct Diagram {
  std::vector<std::vector<int>> circles;
  std::vector<std::array<int, 3>> vertices;
  std::map<int, int> edges;

  Diagram() = default;
  Diagram(std::vector<std::vector<int>> circles_,
          std::vector<std::array<int, 3>> vertices_,
          std::map<int, int> half_edges);

  int circle_count() const { return static_cast<int>(circles.size()); }
  int leg_count() const;
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  /// degree n = (#legs + #internal vertices)/2
  int degree() const { return (leg_count() + vertex_count()) / 2; }
  bool is_chord_diagram() const { return vertices.empty(); }

  /// First id strictly larger than every id in use.
  int fresh_id() const;

  /// Deterministic encoding: relabels ids by order of appearance (circles
  /// first, then vertices), normalizes vertex triples cyclically, sorts
  /// edges. Equal encodings imply equal diagrams up to id renaming; it is
  /// not a full isomorphism invariant.
  std::string key() const;

  bool operator==(const Diagram& o) const { return key() == o.key(); }
};

/// Formal Q-linear combination of diagrams.
/// Normalized form: terms sorted by diagram key, duplicates merged, zero
/// coefficients dropped.
struct DiagramCombo {
  std::vector<std::pair<Rational, Diagram>> terms;

  DiagramCombo() = default;
  explicit DiagramCombo(Diagram d) { terms.emplace_back(Rational(1), std::move(d)); }

  DiagramCombo& add(Rational coeff, Diagram d);
  /// Sort by key, merge equal keys, drop zeros.
  void normalize();
};

/// Structural violations found by validate(); empty means the diagram is
/// well formed.
std::vector<std::string> validate(const Diagram& d);

}  // namespace vassiliev
