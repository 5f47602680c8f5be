#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symstab/rational.hpp"

namespace symstab {

// Univariate polynomial with rational coefficients, stored low degree first
// and kept trimmed (no trailing zeros).
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& constant);  // NOLINT: implicit lift of constants
  UPoly(long constant) : UPoly(Rational(constant)) {}  // NOLINT
  static UPoly variable();
  static UPoly monomial(const Rational& c, int degree);
  static UPoly from_coeffs(std::vector<Rational> low_to_high);
  // From integer-like coefficients, highest degree first (handy for fixtures).
  static UPoly from_high_to_low(const std::vector<Rational>& high_to_low);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational lead() const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  UPoly derivative() const;
  UPoly pow(unsigned e) const;
  UPoly compose(const UPoly& inner) const;   // p(inner(x))
  UPoly shift(const Rational& a) const;      // p(x + a)
  UPoly monic() const;
  // Integer coefficients with content 1 and positive leading coefficient.
  UPoly primitive() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);  // monic (zero if both zero)
UPoly squarefree_part(const UPoly& p);
// Yun decomposition: factors[i] has multiplicity i+1 (monic, squarefree, coprime).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);
bool divides(const UPoly& d, const UPoly& p);

// Sturm sequence of the squarefree part of p.
std::vector<UPoly> sturm_sequence(const UPoly& p);
int sign_variations(const std::vector<UPoly>& seq, const Rational& x);
// Distinct real roots in (lo, hi].
int sturm_root_count(const UPoly& p, const Rational& lo, const Rational& hi);
// Distinct real roots on the whole line.
int real_root_count(const UPoly& p);
// Cauchy bound: every real root lies in [-B, B].
Rational root_bound(const UPoly& p);
// Disjoint intervals (lo, hi], each holding exactly one distinct root, width ≤ max_width.
std::vector<std::pair<Rational, Rational>> isolate_roots(const UPoly& p, const Rational& lo, const Rational& hi,
                                                         const Rational& max_width);
// p ≥ 0 on [lo, hi], decided exactly.
bool nonnegative_on(const UPoly& p, const Rational& lo, const Rational& hi);
// p > 0 on [lo, hi], decided exactly.
bool positive_on(const UPoly& p, const Rational& lo, const Rational& hi);

}  // namespace symstab
