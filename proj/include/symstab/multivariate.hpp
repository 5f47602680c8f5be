#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "symstab/interval.hpp"
#include "symstab/polynomial.hpp"
#include "symstab/rational.hpp"

namespace symstab {

// Polynomial in at most three named variables with rational coefficients.
// Zero coefficients are never stored; terms are kept in exponent order.
class MPoly {
 public:
  using Exponents = std::array<int, 3>;
  static constexpr std::size_t kMaxVars = 3;

  explicit MPoly(std::vector<std::string> variables = {});
  static MPoly constant(std::vector<std::string> variables, const Rational& c);
  static MPoly variable(std::vector<std::string> variables, const std::string& name);
  static MPoly from_univariate(std::vector<std::string> variables, const std::string& name, const UPoly& p);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  int var_index(const std::string& name) const;
  bool is_zero() const { return terms_.empty(); }
  bool involves(const std::string& name) const;
  int degree_in(const std::string& name) const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;

  Rational evaluate(const std::vector<Rational>& values) const;
  double evaluate(const std::vector<double>& values) const;
  Interval evaluate(const std::vector<Interval>& box) const;

  MPoly derivative(const std::string& name) const;
  MPoly substitute(const std::string& name, const MPoly& value) const;
  MPoly substitute(const std::string& name, const Rational& value) const;
  // Coefficients of powers of `name` (index = power), each free of `name`.
  std::vector<MPoly> coefficients_in(const std::string& name) const;
  // Requires every other variable to be absent.
  UPoly to_univariate(const std::string& name) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly operator+(const Rational& c) const;
  MPoly operator-(const Rational& c) const;
  MPoly pow(unsigned e) const;
  bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  void check_compatible(const MPoly& o) const;
  void add_term(const Exponents& e, const Rational& c);
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

// Sylvester resultant of p and q with respect to `var`. At most one other
// variable may remain; the result is content-normalised with a positive
// leading coefficient.
MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var);

}  // namespace symstab
