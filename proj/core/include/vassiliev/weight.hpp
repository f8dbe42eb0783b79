#pragma once

#include "vassiliev/diagram.hpp"
#include "vassiliev/poly.hpp"

namespace vassiliev {

enum class WeightFlavor { gl, so };

struct EvalOptions {
  bool deframed = true;
  /// Refuse diagrams with more internal vertices than this (the STU state
  /// sum has 2^t terms).
  int max_vertices = 24;
};

/// W_gl on a chord diagram: the monomial c^m where m counts the cycles of
/// leg -> successor(partner(leg)) plus the legless circles.
Poly wgl_chord(const Diagram& d);

/// W_so on a chord diagram: sum over the 2^n parallel/crossed chord states
/// of (-1)^#crossed c^#loops.
Poly wso_chord(const Diagram& d);

/// Full pipeline: optionally deframe, STU-reduce, evaluate chord terms,
/// combine linearly. Chord evaluations are memoized by diagram key.
/// Throws std::runtime_error if the vertex guard is exceeded and
/// std::invalid_argument if the diagram fails validation.
Poly evaluate(const Diagram& d, WeightFlavor flavor, EvalOptions opts = {});
Poly evaluate(const DiagramCombo& combo, WeightFlavor flavor,
              EvalOptions opts = {});

inline PairedPoly evaluate_pair(const Diagram& d, EvalOptions opts = {}) {
  return {evaluate(d, WeightFlavor::gl, opts), evaluate(d, WeightFlavor::so, opts)};
}
inline PairedPoly evaluate_pair(const DiagramCombo& c, EvalOptions opts = {}) {
  return {evaluate(c, WeightFlavor::gl, opts), evaluate(c, WeightFlavor::so, opts)};
}

/// Deframed so value divided exactly by c(c-1). Throws std::domain_error if
/// the division is not exact (which would signal a broken invariant).
Poly wso_tilde(const Diagram& d, EvalOptions opts = {});

enum class Functional { r, y, w };

/// The derived scalar functionals:
///   r = (-1)^l * gl(2)
///   y = coefficient of c^(n+l) in gl
///   w = (-2)^n * so(4) - 2(-2)^l * so(-2)
/// n and l must match the diagram's degree and circle count.
Rational functional(const Diagram& d, Functional kind, int n, int l,
                    EvalOptions opts = {});

}  // namespace vassiliev
