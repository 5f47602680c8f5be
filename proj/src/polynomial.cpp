#include "symstab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symstab {

UPoly::UPoly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

UPoly UPoly::variable() { return monomial(1, 1); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  UPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

UPoly UPoly::from_coeffs(std::vector<Rational> low_to_high) {
  UPoly p;
  p.c_ = std::move(low_to_high);
  p.trim();
  return p;
}

UPoly UPoly::from_high_to_low(const std::vector<Rational>& high_to_low) {
  return from_coeffs(std::vector<Rational>(high_to_low.rbegin(), high_to_low.rend()));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0);
}

Rational UPoly::lead() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UPoly::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UPoly UPoly::derivative() const {
  UPoly d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.c_.push_back(c_[i] * static_cast<long>(i));
  d.trim();
  return d;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UPoly(*it);
  return acc;
}

UPoly UPoly::shift(const Rational& a) const {
  return compose(from_coeffs({a, Rational(1)}));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly p = *this;
  Rational l = lead();
  for (auto& c : p.c_) c /= l;
  return p;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1, num_gcd = 0;
  for (auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> out;
  for (auto& c : c_) {
    Rational s = c * den;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), s.get_num_mpz_t());
    out.push_back(s);
  }
  if (lead() < 0) num_gcd = -num_gcd;
  for (auto& c : out) c /= num_gcd;
  return from_coeffs(std::move(out));
}

UPoly UPoly::operator-() const {
  UPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string cs = symstab::to_string(abs(c));
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    if (i == 0) s += cs;
    else {
      if (abs(c) != 1) s += cs + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const Rational lb = b.lead();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] / lb;
    quo[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly::from_coeffs(std::move(quo)), UPoly::from_coeffs(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

bool divides(const UPoly& d, const UPoly& p) { return divmod(p, d).second.is_zero(); }

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UPoly(1);
  UPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  std::vector<UPoly> out;
  if (p.degree() <= 0) return out;
  UPoly a = p.monic();
  UPoly b = gcd(a, a.derivative());
  UPoly c = divmod(a, b).first;
  UPoly d = divmod(a.derivative(), b).first - c.derivative();
  for (;;) {
    UPoly g = gcd(c, d);
    out.push_back(g.monic());
    c = divmod(c, g).first;
    if (c.degree() <= 0) break;
    d = divmod(d, g).first - c.derivative();
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  std::vector<UPoly> seq{squarefree_part(p)};
  if (seq[0].degree() <= 0) return seq;
  seq.push_back(seq[0].derivative());
  while (seq.back().degree() > 0) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

namespace {
int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }
}  // namespace

int sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
  int variations = 0, last = 0;
  for (auto& p : seq) {
    int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

namespace {

int variations_at_infinity(const std::vector<UPoly>& seq, bool positive) {
  int variations = 0, last = 0;
  for (auto& p : seq) {
    int s = sgn(p.lead());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int sturm_root_count(const UPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_root_count: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_root_count: need lo < hi");
  auto seq = sturm_sequence(p);
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

int real_root_count(const UPoly& p) {
  auto seq = sturm_sequence(p);
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

Rational root_bound(const UPoly& p) {
  if (p.degree() <= 0) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, symstab::abs(p.coeff(i) / p.lead()));
  return 1 + m;
}

std::vector<std::pair<Rational, Rational>> isolate_roots(const UPoly& p, const Rational& lo, const Rational& hi,
                                                         const Rational& max_width) {
  auto seq = sturm_sequence(p);
  std::vector<std::pair<Rational, Rational>> out;
  struct Job {
    Rational a, b;
    int va, vb;
  };
  std::vector<Job> stack{{lo, hi, sign_variations(seq, lo), sign_variations(seq, hi)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    int count = j.va - j.vb;
    if (count == 0) continue;
    if (count == 1 && j.b - j.a <= max_width) {
      out.emplace_back(j.a, j.b);
      continue;
    }
    Rational mid = (j.a + j.b) / 2;
    int vm = sign_variations(seq, mid);
    // Push the upper half first so roots come out in increasing order.
    stack.push_back({mid, j.b, vm, j.vb});
    stack.push_back({j.a, mid, j.va, vm});
  }
  return out;
}

bool nonnegative_on(const UPoly& p, const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("nonnegative_on: empty interval");
  if (p.is_zero()) return true;
  if (p(lo) < 0 || p(hi) < 0) return false;
  if (lo == hi) return true;
  // Sign can only change at roots of odd multiplicity.
  UPoly odd(1);
  auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); i += 2) odd *= factors[i];
  if (odd.degree() > 0) {
    int inside = sturm_root_count(odd, lo, hi) - (odd(hi) == 0 ? 1 : 0);
    if (inside > 0) return false;
  }
  // Constant sign on (lo,hi) away from zeros: sample a non-root point.
  for (int j = 1;; ++j) {
    Rational t = lo + (hi - lo) * ratio(j, p.degree() + 2);
    Rational v = p(t);
    if (v != 0) return v > 0;
  }
}

bool positive_on(const UPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero() || p(lo) <= 0) return false;
  if (lo == hi) return true;
  if (p.degree() > 0 && sturm_root_count(p, lo, hi) > 0) return false;
  return true;
}

}  // namespace symstab
