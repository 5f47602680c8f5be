#include "symstab/multivariate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symstab/matrix.hpp"

namespace symstab {

MPoly::MPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  if (vars_.size() > kMaxVars) throw std::invalid_argument("at most three variables");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable name");
}

MPoly MPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MPoly p(std::move(variables));
  p.add_term({0, 0, 0}, c);
  return p;
}

MPoly MPoly::variable(std::vector<std::string> variables, const std::string& name) {
  MPoly p(std::move(variables));
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(p.var_index(name))] = 1;
  p.add_term(e, 1);
  return p;
}

MPoly MPoly::from_univariate(std::vector<std::string> variables, const std::string& name, const UPoly& u) {
  MPoly p(std::move(variables));
  int idx = p.var_index(name);
  for (int i = 0; i <= u.degree(); ++i) {
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(idx)] = i;
    p.add_term(e, u.coeff(i));
  }
  return p;
}

int MPoly::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown variable '" + name + "'");
}

bool MPoly::involves(const std::string& name) const { return degree_in(name) > 0; }

int MPoly::degree_in(const std::string& name) const {
  const auto idx = static_cast<std::size_t>(var_index(name));
  int d = 0;
  for (auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

Rational MPoly::constant_term() const { return coefficient({0, 0, 0}); }

Rational MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MPoly::check_compatible(const MPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials over different variable lists");
}

Rational MPoly::evaluate(const std::vector<Rational>& values) const {
  if (values.size() != vars_.size()) throw std::invalid_argument("evaluate: wrong number of values");
  Rational acc = 0;
  for (auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (e[i]) t *= symstab::pow(values[i], static_cast<unsigned>(e[i]));
    acc += t;
  }
  return acc;
}

double MPoly::evaluate(const std::vector<double>& values) const {
  if (values.size() != vars_.size()) throw std::invalid_argument("evaluate: wrong number of values");
  double acc = 0;
  for (auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < vars_.size(); ++i) t *= std::pow(values[i], e[i]);
    acc += t;
  }
  return acc;
}

Interval MPoly::evaluate(const std::vector<Interval>& box) const {
  if (box.size() != vars_.size()) throw std::invalid_argument("evaluate: wrong number of intervals");
  Interval acc(Rational(0));
  for (auto& [e, c] : terms_) {
    Interval t(c);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (e[i]) t = t * box[i].pow(static_cast<unsigned>(e[i]));
    acc = acc + t;
  }
  return acc;
}

MPoly MPoly::derivative(const std::string& name) const {
  const auto idx = static_cast<std::size_t>(var_index(name));
  MPoly d(vars_);
  for (auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents f = e;
    --f[idx];
    d.add_term(f, c * e[idx]);
  }
  return d;
}

MPoly MPoly::substitute(const std::string& name, const MPoly& value) const {
  check_compatible(value);
  const auto idx = static_cast<std::size_t>(var_index(name));
  MPoly out(vars_);
  std::vector<MPoly> powers{MPoly::constant(vars_, 1)};
  for (auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[idx]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[idx] = 0;
    MPoly mono(vars_);
    mono.add_term(rest, c);
    out += mono * powers[static_cast<std::size_t>(e[idx])];
  }
  return out;
}

MPoly MPoly::substitute(const std::string& name, const Rational& value) const {
  return substitute(name, MPoly::constant(vars_, value));
}

std::vector<MPoly> MPoly::coefficients_in(const std::string& name) const {
  const auto idx = static_cast<std::size_t>(var_index(name));
  std::vector<MPoly> out(static_cast<std::size_t>(degree_in(name)) + 1, MPoly(vars_));
  for (auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[idx] = 0;
    out[static_cast<std::size_t>(e[idx])].add_term(rest, c);
  }
  return out;
}

UPoly MPoly::to_univariate(const std::string& name) const {
  const auto idx = static_cast<std::size_t>(var_index(name));
  std::vector<Rational> c;
  for (auto& [e, v] : terms_) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (i != idx && e[i] != 0) throw std::invalid_argument("to_univariate: other variables present");
    if (c.size() <= static_cast<std::size_t>(e[idx])) c.resize(static_cast<std::size_t>(e[idx]) + 1, Rational(0));
    c[static_cast<std::size_t>(e[idx])] = v;
  }
  return UPoly::from_coeffs(std::move(c));
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compatible(o);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  check_compatible(o);
  MPoly r(vars_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
  terms_ = std::move(r.terms_);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::operator+(const Rational& c) const { return *this + MPoly::constant(vars_, c); }
MPoly MPoly::operator-(const Rational& c) const { return *this - MPoly::constant(vars_, c); }

MPoly MPoly::pow(unsigned e) const {
  MPoly result = MPoly::constant(vars_, 1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::string cs = symstab::to_string(abs(c));
    if (mono.empty()) s += cs;
    else s += (abs(c) == 1 ? "" : cs + "*") + mono;
  }
  return s;
}

MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var) {
  if (p.variables() != q.variables()) throw std::invalid_argument("resultant: different variable lists");
  if (!p.involves(var) || !q.involves(var)) throw std::invalid_argument("resultant: degenerate (input free of the variable)");
  const auto& vars = p.variables();
  std::vector<std::string> others;
  for (auto& v : vars)
    if (v != var && (p.involves(v) || q.involves(v))) others.push_back(v);
  if (others.size() > 1) throw std::invalid_argument("resultant: at most one remaining variable is supported");
  auto pc = p.coefficients_in(var), qc = q.coefficients_in(var);
  const int m = static_cast<int>(pc.size()) - 1, n = static_cast<int>(qc.size()) - 1;
  auto sylvester_det = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const auto size = static_cast<std::size_t>(m + n);
    RationalMatrix s(size);
    for (int r = 0; r < n; ++r)
      for (int i = 0; i <= m; ++i) s.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r + i)) = a[static_cast<std::size_t>(m - i)];
    for (int r = 0; r < m; ++r)
      for (int j = 0; j <= n; ++j)
        s.at(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + j)) = b[static_cast<std::size_t>(n - j)];
    return s.determinant();
  };
  auto values_at = [&](const std::vector<MPoly>& coeffs, const Rational& w, const std::string& other) {
    std::vector<Rational> out;
    for (auto& c : coeffs) {
      std::vector<Rational> point(vars.size(), Rational(0));
      if (!other.empty()) point[static_cast<std::size_t>(c.var_index(other))] = w;
      out.push_back(c.evaluate(point));
    }
    return out;
  };
  if (others.empty()) {
    return MPoly::constant(vars, sylvester_det(values_at(pc, 0, ""), values_at(qc, 0, "")));
  }
  const std::string& w = others[0];
  int dp = 0, dq = 0;
  for (auto& c : pc) dp = std::max(dp, c.degree_in(w));
  for (auto& c : qc) dq = std::max(dq, c.degree_in(w));
  const int bound = m * dq + n * dp;
  // Evaluate at 0..bound and interpolate (Newton divided differences).
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= bound; ++i) {
    xs.emplace_back(i);
    ys.push_back(sylvester_det(values_at(pc, Rational(i), w), values_at(qc, Rational(i), w)));
  }
  std::vector<Rational> coef = ys;
  for (int j = 1; j <= bound; ++j)
    for (int i = bound; i >= j; --i)
      coef[static_cast<std::size_t>(i)] =
          (coef[static_cast<std::size_t>(i)] - coef[static_cast<std::size_t>(i - 1)]) /
          (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - j)]);
  UPoly r;
  for (int i = bound; i >= 0; --i) r = r * UPoly::from_coeffs({-xs[static_cast<std::size_t>(i)], Rational(1)}) + UPoly(coef[static_cast<std::size_t>(i)]);
  return MPoly::from_univariate(vars, w, r.primitive());
}

}  // namespace symstab
