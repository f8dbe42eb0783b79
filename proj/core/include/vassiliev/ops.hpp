#pragma once

#include "vassiliev/diagram.hpp"

namespace vassiliev {

/// d plus extra bare circles.
Diagram disjoint_union(const Diagram& d, int extra_circles);

/// Copy of d with every id shifted by offset.
Diagram relabel(const Diagram& d, int offset);

/// Connected sum along the chosen circles: each circle is cut immediately
/// after its last leg (anywhere on a legless circle) and spliced respecting
/// orientation. The merged circle becomes circle 0 of the result.
/// Throws std::out_of_range on a bad circle index.
Diagram connected_sum(const Diagram& d1, int circle1, const Diagram& d2,
                      int circle2);

/// Deframing map: each connected component that is a single chord {p,q}
/// expands into chord − ½(isolated chord at p, q removed) − ½(same at q).
/// Components containing internal vertices are untouched.
DiagramCombo deframe(const Diagram& d);

/// Resolve all internal vertices via the STU relation; the result is a
/// combination of chord diagrams (2^t raw terms for t internal vertices,
/// before cancellation).
DiagramCombo stu_reduce(const Diagram& d);

enum class Template { t, x3 };

/// Replace the internal vertex at index vi by the given 3-legged template
/// (t = triangle, degree +1; x3 = the 7-vertex graph, degree +3), grafting
/// the template's external legs onto the vertex's three half-edges in
/// matching cyclic order. Throws std::out_of_range on a bad index.
Diagram insert_template(const Diagram& d, int vi, Template tmpl);

/// Reverse the cyclic order of one internal vertex (AS relation negates the
/// evaluated values).
Diagram flip_vertex(const Diagram& d, int vi);

}  // namespace vassiliev
