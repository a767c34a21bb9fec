#include "ihf/local_equiv.hpp"

#include <algorithm>
#include <vector>

namespace ihf {

namespace {

std::vector<std::vector<int>> rows_of(const MonoMatrix& m) {
  std::vector<std::vector<int>> out(m.rows().size());
  for (int c = 0; c < m.cols().size(); ++c) {
    for (int r : m.column(c)) out[r].push_back(c);
  }
  return out;
}

// Variable ids for the grading-allowed slots of one unknown map, laid out
// after `first` in the combined system.
struct Slots {
  std::vector<std::pair<int, int>> list;
  std::map<std::pair<int, int>, int> id;

  Slots(const Basis& rows, const Basis& cols, const Grading& delta,
        int first) {
    for (int r = 0; r < rows.size(); ++r) {
      for (int c = 0; c < cols.size(); ++c) {
        if (slot_exponent(rows.grading(r), cols.grading(c), delta)) {
          id[{r, c}] = first + (int)list.size();
          list.push_back({r, c});
        }
      }
    }
  }
  int find(int r, int c) const {
    auto it = id.find({r, c});
    return it == id.end() ? -1 : it->second;
  }
};

void push(std::vector<int>& support, int var) {
  if (var >= 0) support.push_back(var);
}

}  // namespace

std::optional<LocalMapWitness> find_local_map(const IotaComplex& x,
                                              const IotaComplex& y) {
  const GradedComplex& cx = x.complex;
  const GradedComplex& cy = y.complex;
  HomologyModule hx = homology(cx);
  HomologyModule hy = homology(cy);
  if (hx.towers.size() != 1 || hy.towers.size() != 1)
    throw structural_error(
        "local map search needs one free homology tower on each side");

  Slots fs(cy.gens, cx.gens, Grading(0), 0);
  Slots hs(cy.gens, cx.gens, Grading(-1), (int)fs.list.size());
  F2System sys((int)(fs.list.size() + hs.list.size()));

  auto dy_rows = rows_of(cy.diff);
  auto iy_rows = rows_of(y.iota);

  // d_Y f + f d_X = 0 at every allowed degree-1 composite slot.
  for (int r = 0; r < cy.gens.size(); ++r) {
    for (int c = 0; c < cx.gens.size(); ++c) {
      if (!slot_exponent(cy.gens.grading(r), cx.gens.grading(c), Grading(1)))
        continue;
      std::vector<int> support;
      for (int m : dy_rows[r]) push(support, fs.find(m, c));
      for (int m : cx.diff.column(c)) push(support, fs.find(r, m));
      if (!support.empty()) sys.add_constraint(support, false);
    }
  }

  // f iota_X + iota_Y f + d_Y h + h d_X = 0 at every degree-0 slot.
  for (int r = 0; r < cy.gens.size(); ++r) {
    for (int c = 0; c < cx.gens.size(); ++c) {
      if (!slot_exponent(cy.gens.grading(r), cx.gens.grading(c), Grading(0)))
        continue;
      std::vector<int> support;
      for (int m : x.iota.column(c)) push(support, fs.find(r, m));
      for (int m : iy_rows[r]) push(support, fs.find(m, c));
      for (int m : dy_rows[r]) push(support, hs.find(m, c));
      for (int m : cx.diff.column(c)) push(support, hs.find(r, m));
      if (!support.empty()) sys.add_constraint(support, false);
    }
  }

  // The image of X's tower class must carry Y's tower class: the functional
  // "coefficient of the tower after multiplying by U^N" applied to f(rep),
  // with N beyond every torsion order so torsion cannot contribute.
  const Element& rep = hx.towers[0].rep;
  long long n_loc = std::max(hx.max_torsion_order(), hy.max_torsion_order()) + 1;
  std::vector<int> lambda_support;
  for (int g : rep.support) {
    for (int r = 0; r < cy.gens.size(); ++r) {
      int var = fs.find(r, g);
      if (var < 0) continue;
      if (tower_coefficient(hy, Element{rep.grading, {r}}, n_loc))
        lambda_support.push_back(var);
    }
  }
  sys.add_constraint(lambda_support, true);

  F2SolutionSpace sol = solve_affine_f2(sys);
  if (!sol.solvable()) return std::nullopt;

  MonoMatrix f(cy.gens, cx.gens, Grading(0));
  MonoMatrix h(cy.gens, cx.gens, Grading(-1));
  for (int i = 0; i < (int)fs.list.size(); ++i) {
    if (sol.particular->get(i)) f.toggle(fs.list[i].first, fs.list[i].second);
  }
  for (int i = 0; i < (int)hs.list.size(); ++i) {
    if (sol.particular->get((int)fs.list.size() + i))
      h.toggle(hs.list[i].first, hs.list[i].second);
  }

  if (!is_chain_map(cx, cy, f))
    throw internal_error("local map witness failed the chain-map recheck");
  MonoMatrix lhs = add(compose(f, x.iota), compose(y.iota, f));
  MonoMatrix rhs = add(compose(cy.diff, h), compose(h, cx.diff));
  if (lhs != rhs)
    throw internal_error("local map witness failed the homotopy recheck");
  if (!tower_coefficient(hy, f.apply(rep), n_loc))
    throw internal_error("local map witness failed the localization recheck");
  return LocalMapWitness{std::move(f), std::move(h)};
}

IotaComplex group_unit() {
  Basis b;
  b.add("e", Grading(-2));
  MonoMatrix diff(b, b, Grading(1));
  MonoMatrix iota = MonoMatrix::identity(b);
  return IotaComplex(GradedComplex(std::move(b), std::move(diff)),
                     std::move(iota));
}

IotaComplex group_product(const IotaComplex& x, const IotaComplex& y) {
  return tensor(x, y);
}

IotaComplex group_inverse(const IotaComplex& x) { return dual(x); }

DualityWitness duality_witness(const IotaComplex& x) {
  DualityWitness w;
  w.product = tensor(x, dual(x));
  IotaComplex e = group_unit();
  const int n = x.complex.gens.size();

  w.gamma = MonoMatrix(w.product.complex.gens, e.complex.gens, Grading(0));
  w.zeta = MonoMatrix(e.complex.gens, w.product.complex.gens, Grading(0));
  for (int i = 0; i < n; ++i) {
    w.gamma.toggle(i * n + i, 0);
    w.zeta.toggle(0, i * n + i);
  }

  if (compose(w.zeta, w.gamma) != MonoMatrix::identity(e.complex.gens))
    throw internal_error(
        "trace of the diagonal is not the identity (even generator count?)");
  if (!is_chain_map(e.complex, w.product.complex, w.gamma))
    throw internal_error("diagonal class map is not a chain map");
  if (!is_chain_map(w.product.complex, e.complex, w.zeta))
    throw internal_error("trace map is not a chain map");

  MonoMatrix gdef = add(compose(w.gamma, e.iota),
                        compose(w.product.iota, w.gamma));
  auto gh = null_homotopy(e.complex, w.product.complex, gdef);
  if (!gh)
    throw internal_error(
        "no homotopy makes the diagonal map commute with the involutions");
  w.gamma_homotopy = std::move(*gh);

  MonoMatrix zdef = add(compose(w.zeta, w.product.iota),
                        compose(e.iota, w.zeta));
  auto zh = null_homotopy(w.product.complex, e.complex, zdef);
  if (!zh)
    throw internal_error(
        "no homotopy makes the trace map commute with the involutions");
  w.zeta_homotopy = std::move(*zh);
  return w;
}

}  // namespace ihf
