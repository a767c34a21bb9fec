#include "ihf/complex.hpp"

#include <algorithm>
#include <map>

namespace ihf {

GradedComplex::GradedComplex(Basis g, MonoMatrix d)
    : gens(std::move(g)), diff(std::move(d)) {
  if (diff.rows() != gens || diff.cols() != gens)
    throw structural_error("differential must be square over the generators");
  if (diff.delta() != Grading(1))
    throw structural_error("differential must lower grading by 1");
}

ValidationReport validate(const GradedComplex& c) {
  ValidationReport rep;
  MonoMatrix sq = compose(c.diff, c.diff);
  for (const auto& e : sq.entries()) {
    rep.fail("differential does not square to zero: d*d has U^" +
             std::to_string(e.exponent) + " from " + c.gens.name(e.col) +
             " to " + c.gens.name(e.row));
  }
  for (int i = 1; i < c.gens.size(); ++i) {
    if (!Grading::integer_difference(c.gens.grading(i), c.gens.grading(0))) {
      rep.fail("generators do not lie in a single coset of Z: " +
               c.gens.name(0) + " at " + c.gens.grading(0).str() + " vs " +
               c.gens.name(i) + " at " + c.gens.grading(i).str());
      break;
    }
  }
  return rep;
}

int HomologyModule::max_torsion_order() const {
  int m = 0;
  for (const auto& s : torsion) m = std::max(m, s.order);
  return m;
}

namespace {

// Set of columns whose differential hits row r (arrows into r).
std::vector<int> row_support(const MonoMatrix& m, int r) {
  std::vector<int> out;
  for (int c = 0; c < m.cols().size(); ++c) {
    if (c != r && m.column(c).count(r)) out.push_back(c);
  }
  return out;
}

// Shared machinery of homology and reduce: splits two-generator pairs
// (a -> U^n b) off a square differential by elementary basis changes
// new_j = old_j + U^e old_i, each an F2 involution.  Tracks the composite
// base change in both directions and conjugates any extra square maps.
struct Elimination {
  MonoMatrix w;
  MonoMatrix to_stacked, from_stacked;
  std::vector<MonoMatrix> conj;
  std::vector<bool> active;
  const Basis& gens;

  Elimination(const GradedComplex& c, std::vector<MonoMatrix> maps)
      : w(c.diff),
        to_stacked(MonoMatrix::identity(c.gens)),
        from_stacked(MonoMatrix::identity(c.gens)),
        conj(std::move(maps)),
        active(c.gens.size(), true),
        gens(c.gens) {}

  // Basis change new_j = old_j + U^e old_i applied everywhere.
  void elem(int i, int j) {
    w.col_add(j, i);
    w.row_add(i, j);
    from_stacked.col_add(j, i);
    to_stacked.row_add(i, j);
    for (auto& m : conj) {
      m.col_add(j, i);
      m.row_add(i, j);
    }
  }

  // Pivot on the entry b <- U^n a of w; after the change of basis the pair
  // (a, b) splits off as a direct summand and is deactivated.
  long long split(int b, int a) {
    auto n = w.exponent(b, a);
    if (!n || !w.get(b, a)) throw internal_error("split: bad pivot");

    for (int x : row_support(w, b)) {
      if (x != a) elem(a, x);
    }
    std::vector<int> ys(w.column(a).begin(), w.column(a).end());
    for (int y : ys) {
      if (y != b) elem(y, b);
    }

    // d^2 = 0 forces the pair to now be isolated: the only arrow touching
    // a or b is the pivot itself.
    std::vector<int> rb = row_support(w, b);
    if (w.column(a).size() != 1 || !w.get(b, a) || !w.column(b).empty() ||
        rb.size() != 1 || rb[0] != a || !row_support(w, a).empty())
      throw internal_error("split: pair did not isolate (d^2 != 0?)");
    active[a] = false;
    active[b] = false;
    return *n;
  }
};

void require_square_diff(const GradedComplex& c) {
  if (!compose(c.diff, c.diff).is_zero())
    throw structural_error("differential does not square to zero");
}

}  // namespace

HomologyModule homology(const GradedComplex& c) {
  require_square_diff(c);
  Elimination eng(c, {});

  struct Pair {
    int a, b;
    long long n;
  };
  std::vector<Pair> pairs;
  for (;;) {
    // Global pivot: minimal exponent, ties by (row name, col name).
    int pr = -1, pc = -1;
    long long pn = 0;
    for (int col = 0; col < c.size(); ++col) {
      if (!eng.active[col]) continue;
      for (int r : eng.w.column(col)) {
        if (!eng.active[r])
          throw internal_error("homology: entry touching dead generator");
        long long n = *eng.w.exponent(r, col);
        bool better =
            pr < 0 || n < pn ||
            (n == pn && (c.gens.name(r) < c.gens.name(pr) ||
                         (c.gens.name(r) == c.gens.name(pr) &&
                          c.gens.name(col) < c.gens.name(pc))));
        if (better) {
          pr = r;
          pc = col;
          pn = n;
        }
      }
    }
    if (pr < 0) break;
    long long n = eng.split(pr, pc);
    if (n >= 1) pairs.push_back({pc, pr, n});
  }

  HomologyModule h;
  h.to_stacked = std::move(eng.to_stacked);
  h.from_stacked = std::move(eng.from_stacked);

  std::vector<int> tower_idx;
  for (int i = 0; i < c.size(); ++i) {
    if (eng.active[i]) tower_idx.push_back(i);
  }
  std::sort(tower_idx.begin(), tower_idx.end(), [&](int x, int y) {
    if (c.gens.grading(x) != c.gens.grading(y))
      return c.gens.grading(y) < c.gens.grading(x);
    return c.gens.name(x) < c.gens.name(y);
  });
  std::sort(pairs.begin(), pairs.end(), [&](const Pair& x, const Pair& y) {
    if (c.gens.grading(x.b) != c.gens.grading(y.b))
      return c.gens.grading(y.b) < c.gens.grading(x.b);
    if (x.n != y.n) return y.n < x.n;
    return c.gens.name(x.b) < c.gens.name(y.b);
  });

  for (int i : tower_idx) {
    Summand s;
    s.top = c.gens.grading(i);
    s.order = 0;
    s.rep = Element{s.top, {h.from_stacked.column(i).begin(),
                            h.from_stacked.column(i).end()}};
    h.towers.push_back(std::move(s));
    h.tower_gen.push_back(i);
  }
  for (const Pair& p : pairs) {
    Summand s;
    s.top = c.gens.grading(p.b);
    s.order = (int)p.n;
    s.rep = Element{s.top, {h.from_stacked.column(p.b).begin(),
                            h.from_stacked.column(p.b).end()}};
    h.torsion.push_back(std::move(s));
    h.pair_gen.push_back({p.a, p.b});
  }

  // Representatives must be cycles; anything else is an elimination bug.
  for (int i = 0; i < h.summand_count(); ++i) {
    if (!c.diff.apply(h.summand(i).rep).zero())
      throw internal_error("homology: representative is not a cycle");
  }
  return h;
}

Grading d_invariant(const GradedComplex& c) {
  HomologyModule h = homology(c);
  if (h.towers.size() != 1)
    throw structural_error(
        "not a rational-homology-sphere model: expected exactly one free "
        "tower, found " +
        std::to_string(h.towers.size()));
  return h.towers[0].top + Grading(2);
}

MonoMatrix phi(const GradedComplex& c) {
  MonoMatrix out(c.gens, c.gens, Grading(-1));
  for (const auto& e : c.diff.entries()) {
    if (e.exponent % 2 == 1) out.toggle(e.row, e.col);
  }
  return out;
}

std::vector<std::pair<int, long long>> homology_class(const HomologyModule& h,
                                                      const Element& cycle) {
  Element sc = h.to_stacked.apply(cycle);
  std::vector<std::pair<int, long long>> out;
  for (int i = 0; i < (int)h.towers.size(); ++i) {
    if (sc.support.count(h.tower_gen[i])) {
      auto k = slot_exponent(h.towers[i].top, sc.grading, Grading(0));
      if (!k) throw internal_error("homology_class: exponent mismatch");
      out.push_back({i, *k});
    }
  }
  for (int j = 0; j < (int)h.torsion.size(); ++j) {
    auto [a, b] = h.pair_gen[j];
    if (sc.support.count(a))
      throw structural_error("homology_class: element is not a cycle");
    if (sc.support.count(b)) {
      auto k = slot_exponent(h.torsion[j].top, sc.grading, Grading(0));
      if (!k) throw internal_error("homology_class: exponent mismatch");
      if (*k < h.torsion[j].order)
        out.push_back({(int)h.towers.size() + j, *k});
    }
  }
  return out;
}

bool tower_coefficient(const HomologyModule& h, const Element& cycle,
                       long long n) {
  if (h.towers.size() != 1)
    throw structural_error(
        "tower coefficient needs exactly one free tower, found " +
        std::to_string(h.towers.size()));
  Element sc = h.to_stacked.apply(cycle.u_times(n));
  return sc.support.count(h.tower_gen[0]) != 0;
}

namespace {

// Transposed adjacency of a matrix: rows_of[r] = columns hitting row r.
std::vector<std::vector<int>> rows_of(const MonoMatrix& m) {
  std::vector<std::vector<int>> out(m.rows().size());
  for (int c = 0; c < m.cols().size(); ++c) {
    for (int r : m.column(c)) out[r].push_back(c);
  }
  return out;
}

struct SlotIndex {
  std::vector<std::pair<int, int>> slots;
  std::map<std::pair<int, int>, int> id;

  SlotIndex(const Basis& rows, const Basis& cols, const Grading& delta) {
    for (int r = 0; r < rows.size(); ++r) {
      for (int c = 0; c < cols.size(); ++c) {
        if (slot_exponent(rows.grading(r), cols.grading(c), delta)) {
          id[{r, c}] = (int)slots.size();
          slots.push_back({r, c});
        }
      }
    }
  }
  // -1 when the slot is forbidden (its coefficient is identically zero).
  int find(int r, int c) const {
    auto it = id.find({r, c});
    return it == id.end() ? -1 : it->second;
  }
};

// Adds to `sys` the constraints "(d_tgt H + H d_src)[r][c] = rhs[r][c]" for
// unknowns H over `hs`, with rhs read from `f` (or zero when f == nullptr).
void homotopy_constraints(const GradedComplex& src, const GradedComplex& tgt,
                          const SlotIndex& hs, const Grading& eq_delta,
                          const MonoMatrix* f, F2System& sys) {
  auto tgt_rows = rows_of(tgt.diff);
  for (int r = 0; r < tgt.gens.size(); ++r) {
    for (int c = 0; c < src.gens.size(); ++c) {
      if (!slot_exponent(tgt.gens.grading(r), src.gens.grading(c), eq_delta))
        continue;
      std::vector<int> support;
      for (int m : tgt_rows[r]) {  // d_tgt[r][m] * H[m][c]
        int s = hs.find(m, c);
        if (s >= 0) support.push_back(s);
      }
      for (int m : src.diff.column(c)) {  // H[r][m] * d_src[m][c]
        int s = hs.find(r, m);
        if (s >= 0) support.push_back(s);
      }
      bool rhs = f != nullptr && f->get(r, c);
      if (support.empty() && !rhs) continue;
      sys.add_constraint(support, rhs);
    }
  }
}

}  // namespace

std::optional<MonoMatrix> null_homotopy(const GradedComplex& src,
                                        const GradedComplex& tgt,
                                        const MonoMatrix& f) {
  if (f.rows() != tgt.gens || f.cols() != src.gens)
    throw structural_error("null_homotopy: map shape mismatch");
  // H sits one degree above f: delta(dH + Hd) = delta(H) + 1 = delta(f).
  Grading dh = f.delta() - Grading(1);
  SlotIndex hs(tgt.gens, src.gens, dh);
  F2System sys((int)hs.slots.size());
  homotopy_constraints(src, tgt, hs, f.delta(), &f, sys);
  F2SolutionSpace sol = solve_affine_f2(sys);
  if (!sol.solvable()) return std::nullopt;
  MonoMatrix h(tgt.gens, src.gens, dh);
  for (int i = 0; i < (int)hs.slots.size(); ++i) {
    if (sol.particular->get(i)) h.toggle(hs.slots[i].first, hs.slots[i].second);
  }
  return h;
}

bool is_chain_map(const GradedComplex& src, const GradedComplex& tgt,
                  const MonoMatrix& f) {
  return compose(tgt.diff, f) == compose(f, src.diff);
}

MonoMatrix MapSpace::materialize(const BitVec& coords) const {
  MonoMatrix m(rows, cols, delta);
  for (int i = 0; i < (int)slots.size(); ++i) {
    if (coords.get(i)) m.toggle(slots[i].first, slots[i].second);
  }
  return m;
}

std::vector<MonoMatrix> MapSpace::basis() const {
  std::vector<MonoMatrix> out;
  for (const auto& k : space.kernel) out.push_back(materialize(k));
  return out;
}

MapSpace chain_map_space(const GradedComplex& src, const GradedComplex& tgt,
                         const Grading& delta) {
  SlotIndex fs(tgt.gens, src.gens, delta);
  F2System sys((int)fs.slots.size());
  // d_tgt F + F d_src = 0, one equation per allowed composite slot.
  homotopy_constraints(src, tgt, fs, delta + Grading(1), nullptr, sys);
  MapSpace out;
  out.rows = tgt.gens;
  out.cols = src.gens;
  out.delta = delta;
  out.slots = fs.slots;
  out.space = solve_affine_f2(sys);
  return out;
}

std::vector<InducedEntry> induced_on_homology(const MonoMatrix& f,
                                              const HomologyModule& h_src,
                                              const HomologyModule& h_tgt) {
  std::vector<InducedEntry> out;
  for (int i = 0; i < h_src.summand_count(); ++i) {
    const Summand& s = h_src.summand(i);
    Element w = f.apply(s.rep);
    std::vector<std::pair<int, long long>> cls;
    try {
      cls = homology_class(h_tgt, w);
    } catch (const structural_error&) {
      throw internal_error(
          "induced_on_homology: image of a representative is not a cycle "
          "(map is not a chain map)");
    }
    for (auto [dst, k] : cls) {
      if (s.order > 0) {
        // U^order kills the source class; the image must die with it.
        const Summand& t = h_tgt.summand(dst);
        if (t.is_tower() || k + s.order < t.order)
          throw structural_error(
              "induced_on_homology: map does not descend to homology "
              "modules (not a chain map?)");
      }
      out.push_back({i, dst, k});
    }
  }
  return out;
}

Reduced reduce(const GradedComplex& c,
               const std::vector<MonoMatrix>& conjugate) {
  require_square_diff(c);
  for (const auto& m : conjugate) {
    if (m.rows() != c.gens || m.cols() != c.gens)
      throw structural_error("reduce: conjugated map must be square over the "
                             "complex's generators");
  }
  Elimination eng(c, conjugate);

  for (;;) {
    // Deterministic pick: the U^0 entry whose source generator has the
    // lowest grading, ties by source then target name.
    int pr = -1, pc = -1;
    for (int col = 0; col < c.size(); ++col) {
      if (!eng.active[col]) continue;
      for (int r : eng.w.column(col)) {
        if (*eng.w.exponent(r, col) != 0) continue;
        bool better =
            pc < 0 ||
            c.gens.grading(col) < c.gens.grading(pc) ||
            (c.gens.grading(col) == c.gens.grading(pc) &&
             (c.gens.name(col) < c.gens.name(pc) ||
              (c.gens.name(col) == c.gens.name(pc) &&
               c.gens.name(r) < c.gens.name(pr))));
        if (better) {
          pr = r;
          pc = col;
        }
      }
    }
    if (pc < 0) break;
    eng.split(pr, pc);
  }

  std::vector<int> keep;
  std::vector<int> new_index(c.size(), -1);
  Basis red;
  for (int i = 0; i < c.size(); ++i) {
    if (eng.active[i]) {
      new_index[i] = (int)keep.size();
      keep.push_back(i);
      red.add(c.gens.name(i), c.gens.grading(i));
    }
  }

  MonoMatrix rd(red, red, Grading(1));
  for (int c2 : keep) {
    for (int r : eng.w.column(c2)) {
      if (new_index[r] < 0)
        throw internal_error("reduce: surviving arrow into dead generator");
      rd.toggle(new_index[r], new_index[c2]);
    }
  }

  Reduced out;
  out.complex = GradedComplex(red, rd);
  for (const auto& m : eng.conj) {
    MonoMatrix t(red, red, m.delta());
    for (int c2 : keep) {
      for (int r : m.column(c2)) {
        if (new_index[r] >= 0) t.toggle(new_index[r], new_index[c2]);
      }
    }
    out.transported.push_back(std::move(t));
  }

  out.project = MonoMatrix(red, c.gens, Grading(0));
  for (int c2 = 0; c2 < c.size(); ++c2) {
    for (int r : eng.to_stacked.column(c2)) {
      if (new_index[r] >= 0) out.project.toggle(new_index[r], c2);
    }
  }
  out.include = MonoMatrix(c.gens, red, Grading(0));
  for (int c2 : keep) {
    for (int r : eng.from_stacked.column(c2)) {
      out.include.toggle(r, new_index[c2]);
    }
  }
  return out;
}

}  // namespace ihf
