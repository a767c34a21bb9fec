#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ihf/algebra.hpp"
#include "ihf/f2.hpp"

namespace ihf {

// Finitely generated free graded chain complex over F2[U]: the differential
// is a square MonoMatrix over the generators with delta = 1.
struct GradedComplex {
  Basis gens;
  MonoMatrix diff;

  GradedComplex() : diff(Basis{}, Basis{}, Grading(1)) {}
  GradedComplex(Basis g, MonoMatrix d);

  int size() const { return gens.size(); }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(const std::string& msg) {
    ok = false;
    violations.push_back(msg);
  }
};

// Checks the chain-complex axioms: differential shape (square, delta 1) and
// d*d = 0, with offending entries reported.  Slot homogeneity cannot be
// violated by a constructed MonoMatrix, so it is not re-checked here.
ValidationReport validate(const GradedComplex& c);

// One summand of the classified homology: a free tower (order 0) or
// F2[U]/U^order, with `top` the grading of its top class and `rep` a cycle
// representing that class in the original generator basis.
struct Summand {
  Grading top;
  int order = 0;  // 0 = free tower
  Element rep;

  bool is_tower() const { return order == 0; }
};

// H(C) classified into towers and U-torsion, together with the base-change
// data of the stacked basis that computed it.  to_stacked/from_stacked are
// inverse degree-0 isomorphisms between the original and stacked bases; in
// the stacked basis the differential is exactly a union of arrows
// a_j -> U^{n_j} b_j over the recorded torsion pairs.
struct HomologyModule {
  std::vector<Summand> towers;
  std::vector<Summand> torsion;

  MonoMatrix to_stacked, from_stacked;
  std::vector<int> tower_gen;                 // stacked generator per tower
  std::vector<std::pair<int, int>> pair_gen;  // (a, b) per torsion summand

  int summand_count() const {
    return (int)(towers.size() + torsion.size());
  }
  // Summands in reporting order: towers then torsion.
  const Summand& summand(int i) const {
    return i < (int)towers.size() ? towers[i]
                                  : torsion[i - (int)towers.size()];
  }
  // Largest torsion order (0 if none).
  int max_torsion_order() const;
};

HomologyModule homology(const GradedComplex& c);

// d = (tower top) + 2.  Errors unless the homology has exactly one tower.
Grading d_invariant(const GradedComplex& c);

// Formal U-derivative of the differential: each entry U^n of d contributes
// (n mod 2) U^{n-1}.  A chain map raising grading by 1 (delta = -1).
MonoMatrix phi(const GradedComplex& c);

// Expresses the class of `cycle` in summand coordinates: pairs (summand
// index, exponent) meaning U^exponent * (top class of that summand), indices
// as in HomologyModule::summand().  Throws structural_error when the element
// is not a cycle.
std::vector<std::pair<int, long long>> homology_class(const HomologyModule& h,
                                                      const Element& cycle);

// Coefficient of the free-tower class on U^N * cycle (h must have exactly
// one tower).  With N at least the largest torsion order this is the
// localized-class functional.
bool tower_coefficient(const HomologyModule& h, const Element& cycle,
                       long long n);

// Solves d_tgt H + H d_src = f for H with delta = f.delta - 1 (one degree
// higher than f).  Returns nullopt when no homotopy exists.
std::optional<MonoMatrix> null_homotopy(const GradedComplex& src,
                                        const GradedComplex& tgt,
                                        const MonoMatrix& f);

bool is_chain_map(const GradedComplex& src, const GradedComplex& tgt,
                  const MonoMatrix& f);

// The space of all homogeneous chain maps src -> tgt lowering grading by
// delta, as an F2 solution space over the homogeneity-allowed slots.
struct MapSpace {
  Basis rows, cols;
  Grading delta{0};
  std::vector<std::pair<int, int>> slots;  // (row, col) per unknown
  F2SolutionSpace space;

  MonoMatrix materialize(const BitVec& coords) const;
  std::vector<MonoMatrix> basis() const;
};

MapSpace chain_map_space(const GradedComplex& src, const GradedComplex& tgt,
                         const Grading& delta);

// Induced map on classified homology: entries (src summand, dst summand,
// exponent) meaning top(src) |-> U^exponent top(dst), summand indices as in
// HomologyModule::summand().  f must be a chain map src -> tgt.
struct InducedEntry {
  int src, dst;
  long long exponent;
  bool operator==(const InducedEntry& o) const {
    return src == o.src && dst == o.dst && exponent == o.exponent;
  }
};

std::vector<InducedEntry> induced_on_homology(const MonoMatrix& f,
                                              const HomologyModule& h_src,
                                              const HomologyModule& h_tgt);

// Result of cancelling all U^0 differential entries: a smaller chain
// homotopy equivalent complex, the supplied square maps conjugated by the
// same basis changes and restricted, and the degree-0 chain maps
// project (C -> reduced) / include (reduced -> C) with project*include = id.
struct Reduced {
  GradedComplex complex;
  std::vector<MonoMatrix> transported;
  MonoMatrix project, include;
};

Reduced reduce(const GradedComplex& c,
               const std::vector<MonoMatrix>& conjugate = {});

}  // namespace ihf
