#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ihf {

// Dense bit vector over GF(2).
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool b) {
    uint64_t m = uint64_t(1) << (i & 63);
    if (b)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void toggle(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

  void operator^=(const BitVec& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  }
  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

  // Index of the lowest set bit, or -1.
  int first_set() const;

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Affine system A x = b over GF(2), built row by row.
class F2System {
 public:
  explicit F2System(int n_unknowns) : n_(n_unknowns) {}

  int unknowns() const { return n_; }

  // Adds the constraint  sum_{i in support} x_i = rhs.  Repeated indices in
  // `support` cancel in pairs.
  void add_constraint(const std::vector<int>& support, bool rhs);

  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<bool>& rhs() const { return rhs_; }

 private:
  int n_;
  std::vector<BitVec> rows_;
  std::vector<bool> rhs_;
};

// Solution set of an affine system: empty (no particular solution) or an
// affine subspace `particular + span(kernel)`.
struct F2SolutionSpace {
  int n = 0;
  std::optional<BitVec> particular;
  std::vector<BitVec> kernel;

  bool solvable() const { return particular.has_value(); }
  // Dimension of the solution set (kernel rank); meaningless if unsolvable.
  int dimension() const { return static_cast<int>(kernel.size()); }
};

F2SolutionSpace solve_affine_f2(const F2System& sys);

}  // namespace ihf
