#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihf/iota.hpp"

namespace ihf {

// Zig-zag model of the knot Floer complex of a (2, 2k+1) torus knot or its
// mirror: generators on a staircase of plane positions between (0, k) and
// (k, 0), differential connecting each "odd" generator to its two corner
// neighbors (direction reversed for mirrors), and the reflection
// (i, j) |-> (j, i) as the conjugation symmetry.
struct StaircaseGen {
  std::string name;
  long long i, j;     // plane position of the drawn generator
  Grading maslov{0};  // absolute Maslov grading of [x, 0, 0]... at (i, j)
};

struct StaircaseModel {
  int k = 0;
  bool mirrored = false;
  std::vector<StaircaseGen> gens;  // staircase order; reflection reverses it

  // Arrows of the differential as (src, dst) generator indices; U-powers
  // come from positions at truncation time.
  std::vector<std::pair<int, int>> arrows;
};

// The T(2, 2k+1) staircase (k >= 1) or its mirror.  Generator names are
// single letters a, b, c, ... along the staircase; Maslov gradings are
// normalized so the i <= 0 truncation has its homology tower top at -2.
StaircaseModel staircase(int k, bool mirrored);

// Degenerate one-generator staircase of the unknot.
StaircaseModel unknot_staircase();

// An iota-complex produced from knot data, remembering where it came from
// and, once pinned, the absolute d-invariant of the modeled surgery.
struct SurgeryModel {
  IotaComplex model;
  std::string knot;        // e.g. "T(2,7)", "mirror T(2,11)", "unknot"
  std::string truncation;  // "max(i,j)<=0", "min(i,j)<=0", or "i<=0"
  std::optional<Grading> pinned_d;
};

// Large positive surgery model: one F2[U]-generator per staircase generator
// at its maximal U-translate with max(i,j) <= 0; differential, reflection
// and gradings restricted.
SurgeryModel a0_max_model(const StaircaseModel& s);

// Large negative surgery model: maximal U-translate with min(i,j) <= 0.
SurgeryModel quadrant_min_model(const StaircaseModel& s);

// Uniform grading shift placing the homology tower top at d - 2; errors
// unless the homology has exactly one tower.
SurgeryModel pin_grading(const SurgeryModel& m, const Grading& d);

}  // namespace ihf
