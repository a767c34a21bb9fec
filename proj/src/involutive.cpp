#include "ihf/involutive.hpp"

#include <algorithm>

namespace ihf {

ConeComplex build_cone(const IotaComplex& x) {
  const Basis& g = x.complex.gens;
  const int n = g.size();

  Basis cg;
  for (int i = 0; i < n; ++i) cg.add(g.name(i), g.grading(i) + Grading(1));
  for (int i = 0; i < n; ++i) cg.add("Q(" + g.name(i) + ")", g.grading(i));

  MonoMatrix diff(cg, cg, Grading(1));
  for (int c = 0; c < n; ++c) {
    // d(x) = dx + Q(1 + iota)x
    for (int r : x.complex.diff.column(c)) diff.toggle(r, c);
    diff.toggle(n + c, c);
    for (int r : x.iota.column(c)) diff.toggle(n + r, c);
    // d(Qx) = Q(dx)
    for (int r : x.complex.diff.column(c)) diff.toggle(n + r, n + c);
  }

  MonoMatrix q(cg, cg, Grading(1));
  for (int i = 0; i < n; ++i) q.toggle(n + i, i);

  ConeComplex out;
  out.complex = GradedComplex(std::move(cg), std::move(diff));
  out.q_map = std::move(q);
  out.n = n;
  return out;
}

InvolutiveSummary correction_terms_cone(const IotaComplex& x) {
  InvolutiveSummary out;
  out.d = d_invariant(x.complex);

  ConeComplex cone = build_cone(x);
  out.hfi = homology(cone.complex);
  if (out.hfi.towers.size() != 2)
    throw structural_error(
        "cone homology has " + std::to_string(out.hfi.towers.size()) +
        " free towers, expected 2 (is iota^2 chain homotopic to id?)");

  const Grading& t0 = out.hfi.towers[0].top;
  const Grading& t1 = out.hfi.towers[1].top;
  bool e0 = Grading::even_difference(t0, out.d);
  bool e1 = Grading::even_difference(t1, out.d);
  if (e0 == e1)
    throw structural_error(
        "cone towers do not have opposite parity relative to d");
  const Grading& t_plus = e0 ? t0 : t1;
  const Grading& t_minus = e0 ? t1 : t0;
  out.d_upper = t_plus + Grading(2);
  out.d_lower = t_minus + Grading(1);

  if (out.d < out.d_lower || out.d_upper < out.d)
    throw structural_error(
        "correction terms violate d_lower <= d <= d_upper; input is not a "
        "valid iota-complex");

  out.q_action = induced_on_homology(cone.q_map, out.hfi, out.hfi);
  return out;
}

namespace {

// Coefficient of the localized tower class on U^N * (the degree-g element
// with a single generator in its support), per generator; -1 marks
// generators with no slot at degree g.
std::vector<int> lambda_bits(const GradedComplex& c, const HomologyModule& h,
                             const Grading& g, long long n_loc) {
  std::vector<int> out(c.gens.size(), -1);
  for (int i = 0; i < c.gens.size(); ++i) {
    if (!slot_exponent(c.gens.grading(i), g, Grading(0))) continue;
    out[i] = tower_coefficient(h, Element{g, {i}}, n_loc) ? 1 : 0;
  }
  return out;
}

// Unknown block: one F2 variable per generator with a slot at degree g.
struct Block {
  std::vector<int> gens;               // generator indices
  std::vector<int> var_of;             // generator -> variable id (-1 if none)

  Block(const GradedComplex& c, const Grading& g, int first_var)
      : var_of(c.gens.size(), -1) {
    for (int i = 0; i < c.gens.size(); ++i) {
      if (slot_exponent(c.gens.grading(i), g, Grading(0))) {
        var_of[i] = first_var + (int)gens.size();
        gens.push_back(i);
      }
    }
  }
  int vars() const { return (int)gens.size(); }
};

// Appends constraints saying "sum of m(block elements) + ... = 0 at every
// target generator of degree g_target": used for equations of the form
// m1(v1) + m2(v2) = 0 with homogeneous unknown blocks v1, v2.
void map_rows(const GradedComplex& c, const Grading& g_target,
              const std::vector<std::pair<const MonoMatrix*, const Block*>>&
                  terms,
              F2System& sys) {
  for (int t = 0; t < c.gens.size(); ++t) {
    if (!slot_exponent(c.gens.grading(t), g_target, Grading(0))) continue;
    std::vector<int> support;
    for (auto [m, blk] : terms) {
      for (int src : blk->gens) {
        if (m->get(t, src)) support.push_back(blk->var_of[src]);
      }
    }
    if (!support.empty()) sys.add_constraint(support, false);
  }
}

}  // namespace

std::pair<Grading, Grading> correction_terms_direct(const IotaComplex& x) {
  const GradedComplex& c = x.complex;
  Grading d = d_invariant(c);
  HomologyModule h = homology(c);
  const long long m_max = h.max_torsion_order() + 1;
  MonoMatrix one_plus = add(x.iota, MonoMatrix::identity(c.gens));

  Grading gmax = c.gens.grading(0);
  for (int i = 1; i < c.gens.size(); ++i)
    gmax = std::max(gmax, c.gens.grading(i));

  auto start_at_parity = [&](Grading top) {
    return Grading::even_difference(top, d) ? top : top - Grading(1);
  };

  // d_lower: highest degree r carrying v with dv = 0, (1+iota)v = dw, and
  // nonzero localized class.
  std::optional<Grading> d_lower;
  for (Grading r = start_at_parity(gmax);; r -= Grading(2)) {
    if (r < d - Grading(2) - Grading(2 * m_max) - Grading(2))
      throw structural_error(
          "d_lower search found no feasible grading in its window");
    Block v(c, r, 0);
    Block w(c, r + Grading(1), v.vars());
    F2System sys(v.vars() + w.vars());
    map_rows(c, r - Grading(1), {{&c.diff, &v}}, sys);       // dv = 0
    map_rows(c, r, {{&one_plus, &v}, {&c.diff, &w}}, sys);   // (1+i)v = dw
    std::vector<int> lam = lambda_bits(c, h, r, m_max);
    std::vector<int> loc;
    for (int g : v.gens) {
      if (lam[g] == 1) loc.push_back(v.var_of[g]);
    }
    sys.add_constraint(loc, true);  // lambda(v) = 1
    if (solve_affine_f2(sys).solvable()) {
      d_lower = r + Grading(2);
      break;
    }
  }

  // d_upper: highest w (≡ d mod 2) admitting, for some m <= m_max, elements
  // x @ w-3, y @ w-2, z @ w-2m-2 with dy = (1+iota)x, dz = U^m x, and
  // U^m y + (1+iota)z localizing.
  std::optional<Grading> d_upper;
  for (Grading wv = start_at_parity(gmax + Grading(3));; wv -= Grading(2)) {
    if (wv < d)
      throw structural_error(
          "d_upper search found no feasible grading in its window");
    bool found = false;
    for (long long m = 0; m <= m_max && !found; ++m) {
      Grading gx = wv - Grading(3);
      Grading gy = wv - Grading(2);
      Grading gz = wv - Grading(2 * m + 2);
      Block bx(c, gx, 0);
      Block by(c, gy, bx.vars());
      Block bz(c, gz, bx.vars() + by.vars());
      F2System sys(bx.vars() + by.vars() + bz.vars());
      // dy + (1+iota)x = 0 at degree gx.
      map_rows(c, gx, {{&c.diff, &by}, {&one_plus, &bx}}, sys);
      // dz + U^m x = 0 at degree gx - 2m: U^m x has x's support.
      {
        for (int t = 0; t < c.gens.size(); ++t) {
          if (!slot_exponent(c.gens.grading(t), gz - Grading(1), Grading(0)))
            continue;
          std::vector<int> support;
          for (int src : bz.gens) {
            if (c.diff.get(t, src)) support.push_back(bz.var_of[src]);
          }
          for (int src : bx.gens) {
            if (src == t) support.push_back(bx.var_of[src]);
          }
          if (!support.empty()) sys.add_constraint(support, false);
        }
      }
      // lambda(U^m y + (1+iota)z) = 1 at degree gz.
      std::vector<int> lam = lambda_bits(c, h, gz, m_max);
      std::vector<int> loc;
      for (int g : by.gens) {
        if (lam[g] == 1) loc.push_back(by.var_of[g]);
      }
      for (int src : bz.gens) {
        for (int r : one_plus.column(src)) {
          if (lam[r] == 1) loc.push_back(bz.var_of[src]);
        }
      }
      sys.add_constraint(loc, true);
      if (solve_affine_f2(sys).solvable()) found = true;
    }
    if (found) {
      d_upper = wv;
      break;
    }
  }

  return {*d_lower, *d_upper};
}

InvolutiveSummary ai0_terms(const SurgeryModel& m) {
  if (!m.pinned_d)
    throw argument_error(
        "surgery model has no pinned absolute grading; apply pin_grading "
        "first");
  return correction_terms_cone(m.model);
}

}  // namespace ihf
