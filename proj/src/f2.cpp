#include "ihf/f2.hpp"

#include <algorithm>

namespace ihf {

int BitVec::first_set() const {
  for (size_t k = 0; k < w_.size(); ++k) {
    if (w_[k]) {
      int i = (int)(k * 64) + __builtin_ctzll(w_[k]);
      return i < n_ ? i : -1;
    }
  }
  return -1;
}

void F2System::add_constraint(const std::vector<int>& support, bool rhs) {
  BitVec row(n_);
  for (int i : support) row.toggle(i);
  rows_.push_back(std::move(row));
  rhs_.push_back(rhs);
}

F2SolutionSpace solve_affine_f2(const F2System& sys) {
  const int n = sys.unknowns();
  std::vector<BitVec> rows = sys.rows();
  std::vector<bool> rhs(sys.rhs().begin(), sys.rhs().end());

  // Reduced row echelon form; pivot_row[c] = row with pivot in column c.
  std::vector<int> pivot_row(n, -1);
  int next = 0;
  for (int c = 0; c < n && next < (int)rows.size(); ++c) {
    int p = -1;
    for (int r = next; r < (int)rows.size(); ++r) {
      if (rows[r].get(c)) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(rows[p], rows[next]);
    std::swap(rhs[p], rhs[next]);
    for (int r = 0; r < (int)rows.size(); ++r) {
      if (r != next && rows[r].get(c)) {
        rows[r] ^= rows[next];
        rhs[r] = rhs[r] ^ rhs[next];
      }
    }
    pivot_row[c] = next;
    ++next;
  }

  F2SolutionSpace out;
  out.n = n;
  for (int r = next; r < (int)rows.size(); ++r) {
    if (rhs[r]) return out;  // 0 = 1: inconsistent
  }

  BitVec part(n);
  for (int c = 0; c < n; ++c) {
    if (pivot_row[c] >= 0) part.set(c, rhs[pivot_row[c]]);
  }
  out.particular = std::move(part);

  for (int f = 0; f < n; ++f) {
    if (pivot_row[f] >= 0) continue;
    BitVec k(n);
    k.set(f, true);
    for (int c = 0; c < n; ++c) {
      if (pivot_row[c] >= 0 && rows[pivot_row[c]].get(f)) k.set(c, true);
    }
    out.kernel.push_back(std::move(k));
  }
  return out;
}

}  // namespace ihf
