#include "symstab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace symstab {

LpResult simplex_max(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                     const std::vector<double>& c, int max_pivots) {
  const std::size_t m = A.size(), n = c.size();
  for (double v : b)
    if (v < 0) throw std::invalid_argument("simplex_max: needs b >= 0");
  // Tableau with slack columns; row m is the objective row.
  std::vector<std::vector<double>> T(m + 1, std::vector<double>(n + m + 1, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw std::invalid_argument("simplex_max: ragged matrix");
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][n + m] = b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) T[m][j] = -c[j];
  const double eps = 1e-12;
  LpResult r;
  for (int pivots = 0; pivots < max_pivots; ++pivots) {
    // Bland's rule: smallest entering index with negative reduced cost.
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (T[m][j] < -eps) {
        enter = j;
        break;
      }
    if (enter == n + m) {
      r.optimal = true;
      break;
    }
    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i)
      if (T[i][enter] > eps) {
        const double ratio = T[i][n + m] / T[i][enter];
        if (ratio < best - 1e-15 || (std::fabs(ratio - best) <= 1e-15 && leave < m && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
    if (leave == m) {
      r.unbounded = true;
      return r;
    }
    const double piv = T[leave][enter];
    for (double& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const double f = T[i][enter];
      for (std::size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  r.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) r.x[basis[i]] = T[i][n + m];
  r.value = T[m][n + m];
  return r;
}

bool positive_multiplier_verifies(const UPoly& p, const UPoly& r1) {
  if (r1.is_zero()) return false;
  for (auto& c : r1.coeffs())
    if (c < 0) return false;
  const UPoly prod = p * r1;
  for (auto& c : prod.coeffs())
    if (c < 0) return false;
  return prod.coeff(0) > 0 && prod.lead() > 0;
}

MultiplierResult positive_multiplier_lp(const UPoly& p, int max_degree) {
  if (p.is_zero() || p(0) <= 0) throw std::invalid_argument("positive_multiplier_lp: needs p(0) > 0");
  MultiplierResult out;
  // Rescale coefficients so the rows are comparable in floating point.
  const std::size_t dp = static_cast<std::size_t>(p.degree());
  std::vector<double> a(dp + 1);
  for (std::size_t j = 0; j <= dp; ++j) a[j] = p.coeff(static_cast<int>(j)).get_d();
  for (int d = 0; d <= max_degree; ++d) {
    const std::size_t nb = static_cast<std::size_t>(d) + 1;
    // Variables b_0..b_d, t. Maximise t with (p·b)_i ≥ t·s_i, b_k ≥ t, Σb = 1.
    const std::size_t nv = nb + 1;
    std::vector<std::vector<double>> A;
    std::vector<double> rhs;
    for (std::size_t i = 0; i <= dp + static_cast<std::size_t>(d); ++i) {
      std::vector<double> row(nv, 0.0);
      double scale = 0;
      for (std::size_t k = 0; k < nb; ++k)
        if (i >= k && i - k <= dp) scale = std::max(scale, std::fabs(a[i - k]));
      if (scale == 0) continue;
      for (std::size_t k = 0; k < nb; ++k)
        if (i >= k && i - k <= dp) row[k] = -a[i - k] / scale;
      row[nb] = 1;
      A.push_back(row);
      rhs.push_back(0);
    }
    for (std::size_t k = 0; k < nb; ++k) {
      std::vector<double> row(nv, 0.0);
      row[k] = -1;
      row[nb] = 1;
      A.push_back(row);
      rhs.push_back(0);
    }
    std::vector<double> sum(nv, 1.0);
    sum[nb] = 0;
    A.push_back(sum);
    rhs.push_back(1);
    std::vector<double> cap(nv, 0.0);
    cap[nb] = 1;
    A.push_back(cap);
    rhs.push_back(1);
    std::vector<double> c(nv, 0.0);
    c[nb] = 1;
    const LpResult lp = simplex_max(A, rhs, c);
    if (!lp.optimal || lp.value <= 0) continue;
    for (int digits = 6; digits <= 18; digits += 2) {
      const double mult = std::pow(10.0, digits);
      std::vector<Rational> coeffs;
      for (std::size_t k = 0; k < nb; ++k) {
        Integer v;
        mpz_set_d(v.get_mpz_t(), std::round(lp.x[k] * mult));
        coeffs.emplace_back(v);
      }
      const UPoly r1 = UPoly::from_coeffs(coeffs);
      if (positive_multiplier_verifies(p, r1)) {
        out.r1 = r1.primitive();
        out.degree = d;
        out.scale_digits = digits;
        return out;
      }
    }
  }
  return out;
}

}  // namespace symstab
