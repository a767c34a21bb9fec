#pragma once

#include <utility>
#include <vector>

#include "ihf/iota.hpp"
#include "ihf/staircase.hpp"

namespace ihf {

// Mapping cone of Q(1 + iota): generators {x, Qx} with x placed one degree
// above its grading in C and Qx at that grading; differential
// d(x) = dx + Q(1+iota)x, d(Qx) = Q(dx).  A module over F2[Q, U]/(Q^2)
// through q_map: x |-> Qx, Qx |-> 0.
struct ConeComplex {
  GradedComplex complex;
  MonoMatrix q_map;  // degree -1 module action of Q
  int n = 0;         // generators of C; cone indices: [0,n) = x, [n,2n) = Qx
};

ConeComplex build_cone(const IotaComplex& x);

// The three correction terms plus the full homology of the cone and the
// induced Q-action on it (entries index summands of hfi).
struct InvolutiveSummary {
  Grading d, d_lower, d_upper;
  HomologyModule hfi;
  std::vector<InducedEntry> q_action;
};

// Reads d_lower/d_upper off the two towers of the cone homology: with
// t+ the tower top of the same parity as d and t- the other,
// d_upper = t+ + 2 and d_lower = t- + 1.
InvolutiveSummary correction_terms_cone(const IotaComplex& x);

// Independent algorithm: maximal-grading feasibility searches for
//   d_lower = 2 + max gr(v) with dv = 0, (1+iota)v exact, v localizing;
//   d_upper = max over m of systems {dy = (1+iota)x, dz = U^m x,
//             U^m y + (1+iota)z localizing}, giving gr(x) + 3.
std::pair<Grading, Grading> correction_terms_direct(const IotaComplex& x);

// Correction terms of a large-surgery model; requires the absolute grading
// to have been pinned.
InvolutiveSummary ai0_terms(const SurgeryModel& m);

}  // namespace ihf
