#include "ihf/algebra.hpp"

#include <algorithm>

namespace ihf {

void Basis::add(const std::string& name, const Grading& gr) {
  if (name.empty()) throw structural_error("generator name must be non-empty");
  if (index_.count(name))
    throw structural_error("duplicate generator name: " + name);
  index_[name] = (int)names_.size();
  names_.push_back(name);
  gradings_.push_back(gr);
}

int Basis::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw structural_error("unknown generator name: " + name);
  return it->second;
}

void Element::operator^=(const Element& o) {
  if (grading != o.grading)
    throw structural_error("adding elements of different gradings: " +
                           grading.str() + " vs " + o.grading.str());
  for (int i : o.support) toggle(i);
}

MonoMatrix::MonoMatrix(Basis rows, Basis cols, Grading delta)
    : rows_(std::move(rows)), cols_(std::move(cols)), delta_(delta),
      col_(cols_.size()) {}

MonoMatrix MonoMatrix::identity(const Basis& b) {
  MonoMatrix m(b, b, Grading(0));
  for (int i = 0; i < b.size(); ++i) m.col_[i].insert(i);
  return m;
}

void MonoMatrix::check_slot(int r, int c) const {
  if (r < 0 || r >= rows_.size() || c < 0 || c >= cols_.size())
    throw structural_error("matrix index out of range");
  if (!slot_allowed(r, c))
    throw internal_error(
        "monomial slot forbidden by gradings: " + cols_.name(c) + " -> " +
        rows_.name(r) + " (src " + cols_.grading(c).str() + ", dst " +
        rows_.grading(r).str() + ", delta " + delta_.str() + ")");
}

void MonoMatrix::toggle(int r, int c) {
  check_slot(r, c);
  auto it = col_[c].find(r);
  if (it == col_[c].end())
    col_[c].insert(r);
  else
    col_[c].erase(it);
}

void MonoMatrix::set(int r, int c, bool b) {
  if (b) {
    check_slot(r, c);
    col_[c].insert(r);
  } else {
    col_[c].erase(r);
  }
}

bool MonoMatrix::is_zero() const {
  for (const auto& s : col_)
    if (!s.empty()) return false;
  return true;
}

int MonoMatrix::entry_count() const {
  int n = 0;
  for (const auto& s : col_) n += (int)s.size();
  return n;
}

void MonoMatrix::col_add(int j, int i) {
  if (i == j) throw internal_error("col_add with identical columns");
  auto e = slot_exponent(cols_.grading(i), cols_.grading(j), Grading(0));
  if (!e)
    throw internal_error("column operation violates homogeneity: " +
                         cols_.name(j) + " += U^e " + cols_.name(i));
  for (int r : col_[i]) {
    auto it = col_[j].find(r);
    if (it == col_[j].end())
      col_[j].insert(r);
    else
      col_[j].erase(it);
  }
}

void MonoMatrix::row_add(int i, int j) {
  if (i == j) throw internal_error("row_add with identical rows");
  auto e = slot_exponent(rows_.grading(i), rows_.grading(j), Grading(0));
  if (!e)
    throw internal_error("row operation violates homogeneity: " +
                         rows_.name(i) + " += U^e " + rows_.name(j));
  for (int c = 0; c < (int)col_.size(); ++c) {
    if (col_[c].count(j)) toggle(i, c);
  }
}

Element MonoMatrix::apply(const Element& e) const {
  Element out;
  out.grading = e.grading - delta_;
  for (int c : e.support) {
    if (c < 0 || c >= cols_.size())
      throw structural_error("element support outside matrix domain");
    for (int r : col_[c]) out.toggle(r);
  }
  return out;
}

MonoMatrix MonoMatrix::u_times(long long k) const {
  if (k < 0) throw structural_error("negative U-power");
  MonoMatrix out = *this;
  out.delta_ = delta_ + Grading(2 * k);
  return out;
}

std::vector<MonoMatrix::Entry> MonoMatrix::entries() const {
  std::vector<Entry> out;
  for (int c = 0; c < (int)col_.size(); ++c) {
    for (int r : col_[c]) out.push_back({r, c, *exponent(r, c)});
  }
  return out;
}

MonoMatrix compose(const MonoMatrix& a, const MonoMatrix& b) {
  if (a.cols() != b.rows())
    throw structural_error("compose: inner bases do not match");
  MonoMatrix out(a.rows(), b.cols(), a.delta() + b.delta());
  for (int c = 0; c < b.cols().size(); ++c) {
    for (int m : b.column(c)) {
      for (int r : a.column(m)) out.toggle(r, c);
    }
  }
  return out;
}

MonoMatrix add(const MonoMatrix& a, const MonoMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.delta() != b.delta())
    throw structural_error("add: shapes or degrees do not match");
  MonoMatrix out = a;
  for (int c = 0; c < b.cols().size(); ++c) {
    for (int r : b.column(c)) out.toggle(r, c);
  }
  return out;
}

GradedSmith graded_smith(const MonoMatrix& m) {
  GradedSmith s{MonoMatrix::identity(m.rows()), MonoMatrix::identity(m.rows()),
                MonoMatrix::identity(m.cols()), MonoMatrix::identity(m.cols()),
                m,
                {}};
  MonoMatrix& w = s.d;
  std::vector<bool> row_done(m.rows().size(), false);
  std::vector<bool> col_done(m.cols().size(), false);

  for (;;) {
    // Global pivot: minimal exponent, ties by (row name, col name).
    int pr = -1, pc = -1;
    long long pn = 0;
    for (int c = 0; c < w.cols().size(); ++c) {
      if (col_done[c]) continue;
      for (int r : w.column(c)) {
        if (row_done[r]) throw internal_error("smith: stray entry in done row");
        long long n = *w.exponent(r, c);
        bool better =
            pr < 0 || n < pn ||
            (n == pn && (w.rows().name(r) < w.rows().name(pr) ||
                         (w.rows().name(r) == w.rows().name(pr) &&
                          w.cols().name(c) < w.cols().name(pc))));
        if (better) {
          pr = r;
          pc = c;
          pn = n;
        }
      }
    }
    if (pr < 0) break;

    // Clear the pivot column with row operations (W <- E W, P <- E P,
    // Pinv <- Pinv E), then the pivot row with column operations
    // (W <- W E, Q <- Q E, Qinv <- E Qinv).
    for (;;) {
      int r = -1;
      for (int x : w.column(pc)) {
        if (x != pr) {
          r = x;
          break;
        }
      }
      if (r < 0) break;
      w.row_add(r, pr);
      s.p.row_add(r, pr);
      s.p_inv.col_add(pr, r);
    }
    for (;;) {
      int c = -1;
      for (int x = 0; x < w.cols().size(); ++x) {
        if (x != pc && w.column(x).count(pr)) {
          c = x;
          break;
        }
      }
      if (c < 0) break;
      w.col_add(c, pc);
      s.q.col_add(c, pc);
      s.q_inv.row_add(pc, c);
    }

    row_done[pr] = true;
    col_done[pc] = true;
    s.diagonal.push_back({pr, pc, pn});
  }
  return s;
}

}  // namespace ihf
