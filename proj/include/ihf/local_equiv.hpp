#pragma once

#include <optional>

#include "ihf/iota.hpp"

namespace ihf {

// Certificate that X dominates Y in the local-equivalence order: a degree-0
// chain map f: X -> Y commuting with the involutions up to the homotopy h
// (f iota_X + iota_Y f = dh + hd) and sending X's tower class to a class
// with nonzero tower coefficient in Y — equivalently, an isomorphism of the
// localized homologies.  All three conditions re-verify exactly on return.
struct LocalMapWitness {
  MonoMatrix f;  // degree 0, X -> Y
  MonoMatrix h;  // degree +1 homotopy (lowers grading by -1)
};

// Decides, by one combined F2-linear feasibility problem over the
// grading-allowed coefficients of (f, h), whether a witness exists; nullopt
// is a definite "no" for this witness shape.
std::optional<LocalMapWitness> find_local_map(const IotaComplex& x,
                                              const IotaComplex& y);

// The group of iota-complexes up to local equivalence: tensor product,
// dual inverse, one-generator unit.
IotaComplex group_unit();
IotaComplex group_product(const IotaComplex& x, const IotaComplex& y);
IotaComplex group_inverse(const IotaComplex& x);

// Explicit local equivalence between X (x) X* and the unit:
//   gamma: e -> X (x) X*, 1 |-> sum_x x|x
//   zeta:  X (x) X* -> e, the trace (x|y |-> [x == y] e)
// Both are chain maps, zeta gamma = id (the generator count is odd), and
// each commutes with the involutions up to the recorded homotopy.  Any
// failure is a hard internal error: existence is a theorem for valid X.
struct DualityWitness {
  IotaComplex product;  // tensor(X, dual(X))
  MonoMatrix gamma, gamma_homotopy;
  MonoMatrix zeta, zeta_homotopy;
};

DualityWitness duality_witness(const IotaComplex& x);

}  // namespace ihf
