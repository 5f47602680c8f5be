#pragma once

#include <string>

#include "symstab/rational.hpp"

namespace symstab {

// Closed rational interval [lo, hi]; all operations are exact.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(const Rational& point) : lo(point), hi(point) {}  // NOLINT
  Interval(const Rational& a, const Rational& b);

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Interval pow(unsigned e) const;
  std::string to_string() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

}  // namespace symstab
