#include "symstab/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace symstab {

Interval::Interval(const Rational& a, const Rational& b) : lo(a), hi(b) {
  if (a > b) throw std::invalid_argument("interval with lo > hi");
}

Interval Interval::pow(unsigned e) const {
  if (e == 0) return Interval(Rational(1));
  Rational a = symstab::pow(lo, e), b = symstab::pow(hi, e);
  if (e % 2 == 1) return Interval(a, b);
  if (lo >= 0) return Interval(a, b);
  if (hi <= 0) return Interval(b, a);
  return Interval(Rational(0), std::max(a, b));
}

std::string Interval::to_string() const {
  return "[" + symstab::to_string(lo) + ", " + symstab::to_string(hi) + "]";
}

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }
Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo - b.hi, a.hi - b.lo); }
Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo >= 0 && b.lo >= 0) return Interval(a.lo * b.lo, a.hi * b.hi);
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

}  // namespace symstab
