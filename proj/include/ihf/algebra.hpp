#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ihf/errors.hpp"
#include "ihf/grading.hpp"

namespace ihf {

// Ordered list of named, graded free-module generators over F2[U]
// (deg U = -2).  Names are unique; order is part of the data and fixes all
// tie-breaking downstream.
class Basis {
 public:
  Basis() = default;

  int size() const { return (int)names_.size(); }
  void add(const std::string& name, const Grading& gr);
  const std::string& name(int i) const { return names_[i]; }
  const Grading& grading(int i) const { return gradings_[i]; }
  // Index of `name`; throws structural_error if absent.
  int index(const std::string& name) const;
  bool contains(const std::string& name) const {
    return index_.count(name) != 0;
  }

  bool operator==(const Basis& o) const {
    return names_ == o.names_ && gradings_ == o.gradings_;
  }
  bool operator!=(const Basis& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
  std::vector<Grading> gradings_;
  std::map<std::string, int> index_;
};

// Homogeneous module element of degree `grading`: the sum over `support` of
// U^{(gr(i)-grading)/2} * gen_i, with F2 coefficients.  Every nonzero term's
// exponent is forced by the gradings, so only the support is stored.
struct Element {
  Grading grading;
  std::set<int> support;

  bool zero() const { return support.empty(); }
  void toggle(int i) {
    auto it = support.find(i);
    if (it == support.end())
      support.insert(i);
    else
      support.erase(it);
  }
  void operator^=(const Element& o);  // requires equal gradings
  bool operator==(const Element& o) const {
    return grading == o.grading && support == o.support;
  }
  // U^k * e: same support, grading drops by 2k.
  Element u_times(long long k) const {
    return Element{grading - Grading(2 * k), support};
  }
};

// Grading-homogeneous matrix over F2[U] between graded bases.  The map lowers
// grading by `delta`; the slot from column generator x to row generator y can
// only hold the monomial U^n with n = (gr(y) - gr(x) + delta)/2, so entries
// are stored as plain bits and the exponent is recomputed on demand.  Slots
// where n is not a non-negative integer must stay empty.
class MonoMatrix {
 public:
  MonoMatrix() = default;
  MonoMatrix(Basis rows, Basis cols, Grading delta);

  static MonoMatrix identity(const Basis& b);

  const Basis& rows() const { return rows_; }
  const Basis& cols() const { return cols_; }
  const Grading& delta() const { return delta_; }

  std::optional<long long> exponent(int r, int c) const {
    return slot_exponent(rows_.grading(r), cols_.grading(c), delta_);
  }
  bool slot_allowed(int r, int c) const { return exponent(r, c).has_value(); }

  bool get(int r, int c) const { return col_[c].count(r) != 0; }
  const std::set<int>& column(int c) const { return col_[c]; }
  // Flips the bit in slot (r, c); throws internal_error on a forbidden slot.
  void toggle(int r, int c);
  void set(int r, int c, bool b);

  bool is_zero() const;
  int entry_count() const;

  // Elementary updates used by eliminations.  Both correspond to the basis
  // change new_j = old_j + U^e old_i on the column side, resp. the transposed
  // change on rows; `e` is validated against the gradings.
  void col_add(int j, int i);  // column j += U^e * column i
  void row_add(int i, int j);  // row i    += U^e * row j

  // Applies the matrix to a homogeneous element (grading drops by delta).
  Element apply(const Element& e) const;

  bool operator==(const MonoMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && delta_ == o.delta_ &&
           col_ == o.col_;
  }
  bool operator!=(const MonoMatrix& o) const { return !(*this == o); }

  // U^k * M: same bits, delta shifted by 2k.
  MonoMatrix u_times(long long k) const;

  // All nonzero entries as (row, col, exponent), column-major.
  struct Entry {
    int row, col;
    long long exponent;
  };
  std::vector<Entry> entries() const;

 private:
  void check_slot(int r, int c) const;

  Basis rows_, cols_;
  Grading delta_{0};
  std::vector<std::set<int>> col_;
};

// A after B (A*B); column/row bases must agree.
MonoMatrix compose(const MonoMatrix& a, const MonoMatrix& b);
// Entrywise sum; shapes and deltas must agree.
MonoMatrix add(const MonoMatrix& a, const MonoMatrix& b);

// Graded Smith normal form: P * M * Q = D with D diagonal monomial (padded
// with zeros), diagonal exponents non-decreasing, and P, Q invertible
// homogeneous degree-0 basis changes.  P/Q inverses are returned alongside
// since they are products of involutive elementary steps.
struct GradedSmith {
  MonoMatrix p, p_inv;  // rows x rows
  MonoMatrix q, q_inv;  // cols x cols
  MonoMatrix d;
  // Diagonal profile as (row, col, exponent) in diagonal order.
  std::vector<MonoMatrix::Entry> diagonal;
};

GradedSmith graded_smith(const MonoMatrix& m);

}  // namespace ihf
