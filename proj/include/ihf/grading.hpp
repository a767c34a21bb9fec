#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace ihf {

using Rational = boost::rational<long long>;

// Homological degree.  Exact rational arithmetic throughout: correction terms
// of surgeries are genuinely fractional and must never be rounded.
class Grading {
 public:
  Grading() : v_(0) {}
  Grading(long long n) : v_(n) {}  // NOLINT: implicit by design
  Grading(long long num, long long den) : v_(num, den) {}
  explicit Grading(const Rational& r) : v_(r) {}

  const Rational& value() const { return v_; }
  long long numerator() const { return v_.numerator(); }
  long long denominator() const { return v_.denominator(); }

  bool is_integer() const { return v_.denominator() == 1; }

  Grading operator+(const Grading& o) const { return Grading(v_ + o.v_); }
  Grading operator-(const Grading& o) const { return Grading(v_ - o.v_); }
  Grading operator-() const { return Grading(-v_); }
  Grading& operator+=(const Grading& o) {
    v_ += o.v_;
    return *this;
  }
  Grading& operator-=(const Grading& o) {
    v_ -= o.v_;
    return *this;
  }

  bool operator==(const Grading& o) const { return v_ == o.v_; }
  bool operator!=(const Grading& o) const { return v_ != o.v_; }
  bool operator<(const Grading& o) const { return v_ < o.v_; }
  bool operator<=(const Grading& o) const { return v_ <= o.v_; }
  bool operator>(const Grading& o) const { return v_ > o.v_; }
  bool operator>=(const Grading& o) const { return v_ >= o.v_; }

  // a and b differ by an even integer (same U-tower "parity class").
  static bool even_difference(const Grading& a, const Grading& b);
  // a and b differ by an integer (same relative-Z coset).
  static bool integer_difference(const Grading& a, const Grading& b);

  // Canonical serialization: "p" for integers, "p/q" otherwise (q > 0,
  // lowest terms).  parse() accepts exactly that shape.
  std::string str() const;
  static std::optional<Grading> parse(const std::string& s);

 private:
  Rational v_;
};

// Exponent of the U-power forced on a matrix slot from a generator of grading
// `src` to one of grading `dst` under a map that lowers grading by `delta`:
//   n = (dst - src + delta) / 2.
// Returns nullopt when that is not a non-negative integer (the slot must
// then stay empty).
std::optional<long long> slot_exponent(const Grading& dst, const Grading& src,
                                       const Grading& delta);

}  // namespace ihf
