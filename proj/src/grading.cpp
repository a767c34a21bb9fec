#include "ihf/grading.hpp"

#include <cctype>
#include <charconv>

namespace ihf {

bool Grading::even_difference(const Grading& a, const Grading& b) {
  Rational d = a.v_ - b.v_;
  return d.denominator() == 1 && d.numerator() % 2 == 0;
}

bool Grading::integer_difference(const Grading& a, const Grading& b) {
  return (a.v_ - b.v_).denominator() == 1;
}

std::string Grading::str() const {
  std::string s = std::to_string(v_.numerator());
  if (v_.denominator() != 1) {
    s += '/';
    s += std::to_string(v_.denominator());
  }
  return s;
}

namespace {

std::optional<long long> parse_ll(std::string_view sv) {
  if (sv.empty()) return std::nullopt;
  long long out = 0;
  const char* first = sv.data();
  const char* last = sv.data() + sv.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return out;
}

}  // namespace

std::optional<Grading> Grading::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    auto n = parse_ll(s);
    if (!n) return std::nullopt;
    return Grading(*n);
  }
  auto num = parse_ll(std::string_view(s).substr(0, slash));
  auto den = parse_ll(std::string_view(s).substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Grading(*num, *den);
}

std::optional<long long> slot_exponent(const Grading& dst, const Grading& src,
                                       const Grading& delta) {
  Rational t = dst.value() - src.value() + delta.value();
  if (t.denominator() != 1) return std::nullopt;
  long long n2 = t.numerator();
  if (n2 % 2 != 0 || n2 < 0) return std::nullopt;
  return n2 / 2;
}

}  // namespace ihf
