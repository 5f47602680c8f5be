#include "symstab/matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "symstab/multivariate.hpp"

namespace symstab {

RationalMatrix::RationalMatrix(std::size_t n) : rows_(n, std::vector<Rational>(n, Rational(0))) {}

RationalMatrix::RationalMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file " + path);
  std::vector<std::vector<Rational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<Rational> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_rational(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  RationalMatrix m(std::move(rows));
  if (!m.is_square()) throw std::invalid_argument("matrix file " + path + " is not square");
  return m;
}

bool RationalMatrix::is_square() const {
  for (auto& r : rows_)
    if (r.size() != rows_.size()) return false;
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (rows_[i][j] != rows_[j][i]) return false;
  return true;
}

namespace {

Rational det_of(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

}  // namespace

Rational RationalMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  return det_of(rows_);
}

std::vector<Rational> RationalMatrix::leading_principal_minors() const {
  if (!is_square()) throw std::invalid_argument("minors of a non-square matrix");
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= size(); ++k) {
    std::vector<std::vector<Rational>> block(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block[i][j] = rows_[i][j];
    out.push_back(det_of(std::move(block)));
  }
  return out;
}

bool psd_check(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("psd_check: matrix is not square");
  if (!m.is_symmetric()) return false;
  for (auto& d : m.leading_principal_minors())
    if (d <= 0) return false;
  return true;
}

MPoly quadratic_form(const RationalMatrix& m, const std::vector<MPoly>& v) {
  if (v.size() != m.size() || v.empty()) throw std::invalid_argument("quadratic_form: size mismatch");
  MPoly acc(v[0].variables());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m.at(i, j) != 0) acc += m.at(i, j) * (v[i] * v[j]);
  return acc;
}

}  // namespace symstab
