#pragma once

#include <string>
#include <vector>

#include "symstab/rational.hpp"

namespace symstab {

class MPoly;

// Dense square matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n);
  explicit RationalMatrix(std::vector<std::vector<Rational>> rows);
  static RationalMatrix identity(std::size_t n);
  // Whitespace-separated rationals, one row per line; '#' comments ignored.
  static RationalMatrix read_file(const std::string& path);

  std::size_t size() const { return rows_.size(); }
  Rational& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  bool is_square() const;
  bool is_symmetric() const;

  Rational determinant() const;
  // det of the top-left k×k block, k = 1..n.
  std::vector<Rational> leading_principal_minors() const;

 private:
  std::vector<std::vector<Rational>> rows_;
};

// Symmetric with all leading principal minors > 0 (positive definite).
bool psd_check(const RationalMatrix& m);

// v^T M v for a vector of polynomials.
MPoly quadratic_form(const RationalMatrix& m, const std::vector<MPoly>& v);

}  // namespace symstab
