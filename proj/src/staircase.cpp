#include "ihf/staircase.hpp"

#include <algorithm>

namespace ihf {

namespace {

std::string stair_name(int idx, int count) {
  if (count <= 26) return std::string(1, (char)('a' + idx));
  return "s" + std::to_string(idx);
}

enum class Cut { I, MAX, MIN };

long long cut_translate(const StaircaseGen& g, Cut cut) {
  switch (cut) {
    case Cut::I:
      return g.i;
    case Cut::MAX:
      return std::max(g.i, g.j);
    case Cut::MIN:
      return std::min(g.i, g.j);
  }
  return 0;
}

// One F2[U]-generator per staircase generator, placed at its maximal
// U-translate inside the cut; arrows pick up U^{t(src)-t(dst)}.
GradedComplex cut_complex(const StaircaseModel& s, Cut cut) {
  Basis b;
  for (const auto& g : s.gens) {
    long long t = cut_translate(g, cut);
    b.add(g.name, g.maslov + Grading(2 * (g.i - t)));
  }
  MonoMatrix diff(b, b, Grading(1));
  for (auto [src, dst] : s.arrows) diff.toggle(dst, src);
  return GradedComplex(std::move(b), std::move(diff));
}

// Complex of a symmetric cut together with the reflection symmetry as an
// honest degree-0 involution.  (The i <= 0 cut is not symmetric, so the
// reflection exists only for the min/max truncations.)
IotaComplex truncate_staircase(const StaircaseModel& s, Cut cut) {
  GradedComplex c = cut_complex(s, cut);
  const int n = c.gens.size();
  MonoMatrix iota(c.gens, c.gens, Grading(0));
  for (int i = 0; i < n; ++i) iota.toggle(n - 1 - i, i);
  return IotaComplex(std::move(c), std::move(iota));
}

// Shifts all Maslov gradings so the CF-(S^3) model — the i <= 0 cut — has
// its homology tower top at -2.
void normalize_maslov(StaircaseModel& s) {
  GradedComplex cut = cut_complex(s, Cut::I);
  HomologyModule h = homology(cut);
  if (h.towers.size() != 1)
    throw internal_error("staircase i<=0 cut does not have a single tower");
  Grading shift = Grading(-2) - h.towers[0].top;
  for (auto& g : s.gens) g.maslov += shift;
}

}  // namespace

StaircaseModel staircase(int k, bool mirrored) {
  if (k < 1) throw argument_error("staircase needs k >= 1");
  StaircaseModel s;
  s.k = k;
  s.mirrored = mirrored;
  const int n = 2 * k + 1;
  for (int idx = 0; idx < n; ++idx) {
    StaircaseGen g;
    g.name = stair_name(idx, n);
    long long t = idx / 2;
    if (idx % 2 == 0) {
      g.i = t;
      g.j = k - t;
    } else {
      g.i = t + 1;
      g.j = k - t;
    }
    g.maslov = Grading(-idx);
    if (mirrored) {
      g.i = -g.i;
      g.j = -g.j;
      g.maslov = Grading(idx);
    }
    s.gens.push_back(g);
  }
  for (int odd = 1; odd < n; odd += 2) {
    if (!mirrored) {
      s.arrows.push_back({odd, odd - 1});
      s.arrows.push_back({odd, odd + 1});
    } else {
      s.arrows.push_back({odd - 1, odd});
      s.arrows.push_back({odd + 1, odd});
    }
  }
  normalize_maslov(s);
  return s;
}

StaircaseModel unknot_staircase() {
  StaircaseModel s;
  s.k = 0;
  s.gens.push_back({"a", 0, 0, Grading(0)});
  normalize_maslov(s);
  return s;
}

namespace {

std::string knot_label(const StaircaseModel& s) {
  if (s.k == 0) return "unknot";
  std::string t = "T(2," + std::to_string(2 * s.k + 1) + ")";
  return s.mirrored ? "mirror " + t : t;
}

}  // namespace

SurgeryModel a0_max_model(const StaircaseModel& s) {
  return SurgeryModel{truncate_staircase(s, Cut::MAX), knot_label(s),
                      "max(i,j)<=0", std::nullopt};
}

SurgeryModel quadrant_min_model(const StaircaseModel& s) {
  return SurgeryModel{truncate_staircase(s, Cut::MIN), knot_label(s),
                      "min(i,j)<=0", std::nullopt};
}

SurgeryModel pin_grading(const SurgeryModel& m, const Grading& d) {
  HomologyModule h = homology(m.model.complex);
  if (h.towers.size() != 1)
    throw structural_error(
        "pin_grading requires exactly one free tower, found " +
        std::to_string(h.towers.size()));
  Grading shift = (d - Grading(2)) - h.towers[0].top;

  const Basis& old = m.model.complex.gens;
  Basis b;
  for (int i = 0; i < old.size(); ++i)
    b.add(old.name(i), old.grading(i) + shift);
  MonoMatrix diff(b, b, Grading(1));
  for (const auto& e : m.model.complex.diff.entries()) diff.toggle(e.row, e.col);
  MonoMatrix iota(b, b, Grading(0));
  for (const auto& e : m.model.iota.entries()) iota.toggle(e.row, e.col);

  SurgeryModel out;
  out.model = IotaComplex(GradedComplex(std::move(b), std::move(diff)),
                          std::move(iota));
  out.knot = m.knot;
  out.truncation = m.truncation;
  out.pinned_d = d;
  return out;
}

}  // namespace ihf
