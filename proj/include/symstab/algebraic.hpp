#pragma once

#include <optional>
#include <string>

#include "symstab/polynomial.hpp"
#include "symstab/rational.hpp"

namespace symstab {

// Real algebraic number: the unique root of a squarefree polynomial in the
// isolating interval (lo, hi], or an exact rational.
class AlgebraicNumber {
 public:
  explicit AlgebraicNumber(const Rational& value);
  // Throws unless `poly` has exactly one root in (lo, hi].
  AlgebraicNumber(UPoly poly, Rational lo, Rational hi);

  bool is_rational() const { return exact_.has_value(); }
  const std::optional<Rational>& rational() const { return exact_; }
  const UPoly& polynomial() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }

  // Bisects until the interval is at most max_width wide.
  void refine(const Rational& max_width);
  // Exact comparison with a rational.
  int compare(const Rational& q) const;
  double to_double() const;
  std::string to_string() const;

 private:
  UPoly poly_;
  Rational lo_, hi_;
  std::optional<Rational> exact_;
};

}  // namespace symstab
