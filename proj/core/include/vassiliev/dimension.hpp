#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vassiliev/diagram.hpp"
#include "vassiliev/matrix.hpp"
#include "vassiliev/weight.hpp"

namespace vassiliev {

struct DimReport {
  int n = 0;
  int l = 0;
  int dim_H = 0;
  int dim_F = 0;
  int dim_sum = 0;
  int dim_cap = 0;
  long diagram_count = 0;
  double elapsed_seconds = 0.0;
};

struct EnumOptions {
  /// Default guard; enumeration grows as compositions * (2n-1)!!.
  int max_n = 6;
  int max_l = 4;
  bool override_guard = false;
};

/// Streams every chord diagram of degree n on l circles: all compositions
/// of the 2n labeled points into l circles, times all pairings. No
/// isomorphism deduplication (a spanning multiset suffices for ranks).
/// Throws std::invalid_argument when the guard is exceeded.
void enumerate_chords(int n, int l,
                      const std::function<void(const Diagram&)>& sink,
                      EnumOptions opts = {});

long count_chords(int n, int l, EnumOptions opts = {});

/// Ranks of the coefficient matrices of the deframed gl / so / joint values
/// over the full enumeration; dim_cap by inclusion-exclusion.
DimReport dims(int n, int l, EnumOptions opts = {});

/// Expected dimensions from the closed formulas (part 1: H, part 2: F,
/// part 3: cap = min(dim_H, 2)).
int expected_dim_H(int n, int l);
int expected_dim_F(int n, int l);
int expected_dim_cap(int n, int l);

struct RankReport {
  std::string label;
  std::vector<std::string> elements;
  std::vector<PairedPoly> values;
  int rank = 0;
};

/// Evaluates the labeled combos and reports the span dimension under the
/// projection.
RankReport rank_of(const std::string& label,
                   const std::vector<std::pair<std::string, DiagramCombo>>& list,
                   Projection proj, EvalOptions eopts = {});

}  // namespace vassiliev
