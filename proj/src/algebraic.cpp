#include "symstab/algebraic.hpp"

#include <stdexcept>

namespace symstab {

AlgebraicNumber::AlgebraicNumber(const Rational& value)
    : poly_(UPoly::from_coeffs({-value, Rational(1)})), lo_(value), hi_(value), exact_(value) {}

AlgebraicNumber::AlgebraicNumber(UPoly poly, Rational lo, Rational hi)
    : poly_(squarefree_part(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) throw std::invalid_argument("algebraic number: empty isolating interval");
  if (sturm_root_count(poly_, lo_, hi_) != 1)
    throw std::invalid_argument("algebraic number: interval does not isolate a single root");
  if (poly_(hi_) == 0) {
    exact_ = hi_;
    lo_ = hi_;
  }
}

void AlgebraicNumber::refine(const Rational& max_width) {
  if (exact_) return;
  while (hi_ - lo_ > max_width) {
    const Rational mid = (lo_ + hi_) / 2;
    if (poly_(mid) == 0) {
      exact_ = mid;
      lo_ = hi_ = mid;
      return;
    }
    if (sturm_root_count(poly_, lo_, mid) == 1) hi_ = mid;
    else lo_ = mid;
  }
}

int AlgebraicNumber::compare(const Rational& q) const {
  if (exact_) return *exact_ < q ? -1 : (*exact_ > q ? 1 : 0);
  if (q <= lo_) return 1;
  if (q > hi_) return -1;
  if (poly_(q) == 0) return sturm_root_count(poly_, lo_, q) == 1 ? 0 : 1;
  // The root lies in (lo, q] or (q, hi].
  return sturm_root_count(poly_, lo_, q) == 1 ? -1 : 1;
}

double AlgebraicNumber::to_double() const {
  if (exact_) return exact_->get_d();
  AlgebraicNumber copy = *this;
  copy.refine(pow(Rational(1, 2), 60));
  return Rational((copy.lo_ + copy.hi_) / 2).get_d();
}

std::string AlgebraicNumber::to_string() const {
  if (exact_) return symstab::to_string(*exact_);
  return "root of " + poly_.to_string("x") + " in (" + symstab::to_string(lo_) + ", " + symstab::to_string(hi_) + "]";
}

}  // namespace symstab
