#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihf/complex.hpp"

namespace ihf {

// A graded complex with a grading-preserving chain involution-up-to-homotopy:
// iota commutes with d exactly and iota^2 is chain homotopic to the identity.
struct IotaComplex {
  GradedComplex complex;
  MonoMatrix iota;

  IotaComplex() : iota(Basis{}, Basis{}, Grading(0)) {}
  IotaComplex(GradedComplex c, MonoMatrix i);
};

struct IotaReport {
  ValidationReport chain;               // underlying complex
  std::vector<std::string> violations;  // iota-level problems
  std::optional<MonoMatrix> square_witness;  // H with dH+Hd = iota^2 + id

  bool ok() const { return chain.ok && violations.empty(); }
  std::vector<std::string> all_violations() const;
};

// Checks all axioms: valid complex; iota a degree-0 chain map; iota^2 ≃ id
// (witness returned); homology localizes to a single free tower, all
// generators in one coset of Z.
IotaReport validate_iota(const IotaComplex& x);

// Connected-sum product: generators "x|y" with gr = gr(x)+gr(y)+2 (so the
// single-generator complex at -2 is the unit), tensor differential, and
// involution iota_x (x) iota_y.
IotaComplex tensor(const IotaComplex& x, const IotaComplex& y);

// Tensor product of square maps f on X and g on Y, as a map on tensor(X, Y)
// whose basis must be passed in (deltas add).
MonoMatrix tensor_map(const MonoMatrix& f, const MonoMatrix& g,
                      const Basis& product_basis);

// Orientation reversal: transposed differential and involution on the dual
// basis.  Gradings map by gr(x*) = -gr(x) - 4, the reflection fixing the
// unit generator at -2, so dual(unit) = unit and dual is an involution.
IotaComplex dual(const IotaComplex& x);

// Finds the degree-+1 homotopy H with dH + Hd = U*(Phi_X iota_X (x) Phi_Y
// iota_Y) on tensor(x, y) — the vanishing of the connected-sum involution's
// correction term.  Throws internal_error when no witness exists (its
// existence is a theorem for valid inputs).
MonoMatrix check_phi_correction(const IotaComplex& x, const IotaComplex& y);

}  // namespace ihf
