#pragma once

// Shared helpers for property tests: deterministic random complexes with a
// PLANTED homology classification (constructed in stacked form, then
// disguised by random homogeneous base changes), random iota-complexes
// built to satisfy the axioms by construction, and an independent
// grading-by-grading F2 homology oracle.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ihf/iota.hpp"

namespace testutil {

using namespace ihf;
using Rng = std::mt19937_64;

inline long long pick(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

struct Planted {
  GradedComplex complex;
  std::vector<Grading> towers;                      // planted tower tops
  std::vector<std::pair<Grading, int>> torsion;     // planted (top, order)
};

// Applies `moves` random changes of basis  new_j = old_j + U^e old_i  (the
// exponent forced by the gradings) to the differential and to every map in
// `also`, keeping d^2 = 0 and all homogeneity invariants.
inline void shake(Rng& rng, const Basis& gens, MonoMatrix& diff,
                  std::vector<MonoMatrix*> also, int moves) {
  const int n = gens.size();
  if (n < 2) return;
  for (int m = 0; m < moves; ++m) {
    int i = (int)pick(rng, 0, n - 1);
    int j = (int)pick(rng, 0, n - 1);
    if (i == j) continue;
    if (!slot_exponent(gens.grading(i), gens.grading(j), Grading(0))) continue;
    diff.col_add(j, i);
    diff.row_add(i, j);
    for (MonoMatrix* p : also) {
      p->col_add(j, i);
      p->row_add(i, j);
    }
  }
}

// `pairs` two-generator summands a -> U^n b (planting torsion (gr b, n))
// plus `frees` cycle generators (planting towers), in the coset offset + Z,
// listed in shuffled order and disguised by `moves` base changes.
inline Planted random_planted(Rng& rng, int pairs, int frees, Grading offset,
                              int moves) {
  struct Gen {
    std::string name;
    Grading gr{0};
    int partner = -1;  // for a pair's source: index of its target
  };
  std::vector<Gen> gens;
  Planted out;
  int counter = 0;
  auto fresh = [&] { return "g" + std::to_string(counter++); };

  for (int p = 0; p < pairs; ++p) {
    long long n = pick(rng, 1, 3);
    Grading ga = offset + Grading(pick(rng, -5, 5));
    Grading gb = ga + Grading(2 * n - 1);
    int ia = (int)gens.size();
    gens.push_back({fresh(), ga, ia + 1});
    gens.push_back({fresh(), gb, -1});
    out.torsion.push_back({gb, (int)n});
  }
  for (int f = 0; f < frees; ++f) {
    Grading g = offset + Grading(pick(rng, -5, 5));
    gens.push_back({fresh(), g, -1});
    out.towers.push_back(g);
  }

  std::vector<int> order(gens.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> position(gens.size());
  for (size_t i = 0; i < order.size(); ++i) position[order[i]] = (int)i;

  Basis b;
  for (int idx : order) b.add(gens[idx].name, gens[idx].gr);
  MonoMatrix diff(b, b, Grading(1));
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].partner >= 0)
      diff.toggle(position[gens[i].partner], position[(int)i]);
  }
  shake(rng, b, diff, {}, moves);
  out.complex = GradedComplex(std::move(b), std::move(diff));

  std::sort(out.towers.begin(), out.towers.end());
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

// A valid iota-complex: one free generator (the tower) plus `pairs` torsion
// pairs; iota = (optional swap of two identical pairs) + (optional U^e
// twists of the tower into swap-fixed torsion cycles) + d rho + rho d for a
// random degree-(-1) rho, everything conjugated by random base changes.
inline IotaComplex random_iota(Rng& rng, int pairs, Grading offset,
                               int moves) {
  struct Pair {
    Grading ga{0}, gb{0};
    int n = 1;
  };
  std::vector<Pair> ps;
  for (int p = 0; p < pairs; ++p) {
    Pair q;
    q.n = (int)pick(rng, 1, 3);
    q.ga = offset + Grading(pick(rng, -4, 4));
    q.gb = q.ga + Grading(2 * q.n - 1);
    ps.push_back(q);
  }
  Grading gfree = offset + Grading(pick(rng, -4, 4));

  Basis b;
  for (int p = 0; p < (int)ps.size(); ++p) {
    b.add("a" + std::to_string(p), ps[p].ga);
    b.add("b" + std::to_string(p), ps[p].gb);
  }
  b.add("f", gfree);
  const int fi = b.size() - 1;

  MonoMatrix diff(b, b, Grading(1));
  for (int p = 0; p < (int)ps.size(); ++p) diff.toggle(2 * p + 1, 2 * p);

  MonoMatrix iota = MonoMatrix::identity(b);
  // Swap one pair of identical two-step summands, when present.
  std::vector<bool> swapped(ps.size(), false);
  for (int p = 0; p < (int)ps.size() && pick(rng, 0, 1); ++p) {
    for (int q = p + 1; q < (int)ps.size(); ++q) {
      if (ps[p].ga == ps[q].ga && ps[p].n == ps[q].n && !swapped[p] &&
          !swapped[q]) {
        for (int off : {0, 1}) {
          iota.toggle(2 * p + off, 2 * p + off);
          iota.toggle(2 * q + off, 2 * q + off);
          iota.toggle(2 * q + off, 2 * p + off);
          iota.toggle(2 * p + off, 2 * q + off);
        }
        swapped[p] = swapped[q] = true;
        break;
      }
    }
  }
  // Twist the tower into torsion cycles of swap-fixed pairs (iota stays an
  // exact involution: the added nilpotent anticommutes with nothing here).
  for (int p = 0; p < (int)ps.size(); ++p) {
    if (swapped[p]) continue;
    if (slot_exponent(ps[p].gb, gfree, Grading(0)) && pick(rng, 0, 1))
      iota.toggle(2 * p + 1, fi);
  }
  // Null-homotopic perturbation d rho + rho d.
  MonoMatrix rho(b, b, Grading(-1));
  for (int r = 0; r < b.size(); ++r) {
    for (int c = 0; c < b.size(); ++c) {
      if (slot_exponent(b.grading(r), b.grading(c), Grading(-1)) &&
          pick(rng, 0, 3) == 0)
        rho.toggle(r, c);
    }
  }
  iota = add(iota, add(compose(diff, rho), compose(rho, diff)));

  shake(rng, b, diff, {&iota}, moves);
  return IotaComplex(GradedComplex(std::move(b), std::move(diff)),
                     std::move(iota));
}

// ---- Independent homology oracle ------------------------------------------

// F2 rank by Gaussian elimination on row bitsets.
inline int f2_rank(std::vector<std::vector<bool>> m) {
  int rank = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t c = 0; c < cols; ++c) {
    size_t p = rank;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r != (size_t)rank && m[r][c]) {
        for (size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] ^ m[rank][k];
      }
    }
    ++rank;
    if (rank == (int)m.size()) break;
  }
  return rank;
}

// The degree-g slice of C: one F2 coordinate per generator with
// gr(gen) >= g and gr(gen) = g (mod 2), i.e. U^{(gr-g)/2} gen.
inline std::vector<int> slice(const GradedComplex& c, const Grading& g) {
  std::vector<int> out;
  for (int i = 0; i < c.gens.size(); ++i) {
    if (slot_exponent(c.gens.grading(i), g, Grading(0))) out.push_back(i);
  }
  return out;
}

// dim_F2 of H_g(C) by rank counting on the g and g+1 slices.
inline int brute_homology_dim(const GradedComplex& c, const Grading& g) {
  auto src = slice(c, g);
  auto below = slice(c, g - Grading(1));
  auto above = slice(c, g + Grading(1));
  auto matrix_of = [&](const std::vector<int>& from,
                       const std::vector<int>& to) {
    std::vector<std::vector<bool>> m(to.size(),
                                     std::vector<bool>(from.size(), false));
    for (size_t j = 0; j < from.size(); ++j) {
      for (int r : c.diff.column(from[j])) {
        for (size_t i = 0; i < to.size(); ++i) {
          if (to[i] == r) m[i][j] = true;
        }
      }
    }
    return m;
  };
  int rank_out = f2_rank(matrix_of(src, below));
  int rank_in = f2_rank(matrix_of(above, src));
  return (int)src.size() - rank_out - rank_in;
}

// dim_F2 of H_g predicted by a classified module.
inline int classified_dim(const std::vector<Grading>& towers,
                          const std::vector<std::pair<Grading, int>>& torsion,
                          const Grading& g) {
  int d = 0;
  for (const auto& t : towers) {
    if (slot_exponent(t, g, Grading(0))) ++d;
  }
  for (const auto& [top, order] : torsion) {
    auto e = slot_exponent(top, g, Grading(0));
    if (e && *e < order) ++d;
  }
  return d;
}

// Deep scan floor: below this every slice of a complex with these
// generators is periodic, so nothing new can be learned.
inline Grading scan_floor(const GradedComplex& c) {
  if (c.gens.size() == 0) return Grading(0);
  Grading lo = c.gens.grading(0);
  long long max_exp = 0;
  for (int i = 1; i < c.gens.size(); ++i) lo = std::min(lo, c.gens.grading(i));
  for (const auto& e : c.diff.entries())
    max_exp = std::max(max_exp, e.exponent);
  return lo - Grading(2 * (c.gens.size() + max_exp));
}

inline Grading scan_top(const GradedComplex& c) {
  Grading hi = c.gens.grading(0);
  for (int i = 1; i < c.gens.size(); ++i) hi = std::max(hi, c.gens.grading(i));
  return hi;
}

}  // namespace testutil
