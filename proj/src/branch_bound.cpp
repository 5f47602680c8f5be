#include "symstab/branch_bound.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace symstab {

namespace {

struct Node {
  Box box;
  Rational bound;
};

struct ByBound {
  bool operator()(const Node& a, const Node& b) const { return a.bound < b.bound; }
};

class Bounder {
 public:
  Bounder(const MPoly& p, std::vector<MPoly> constraints) : p_(p), constraints_(std::move(constraints)) {
    for (auto& v : p.variables()) grad_.push_back(p.derivative(v));
  }

  Rational upper(const Box& box) const {
    const Interval natural = p_.evaluate(box);
    // Mean-value form around the centre.
    std::vector<Rational> centre;
    for (auto& iv : box) centre.push_back(iv.midpoint());
    Interval mv(p_.evaluate(centre));
    for (std::size_t i = 0; i < box.size(); ++i) {
      if (box[i].width() == 0) continue;
      mv = mv + grad_[i].evaluate(box) * (box[i] - Interval(centre[i]));
    }
    return natural.hi < mv.hi ? natural.hi : mv.hi;
  }

  bool infeasible(const Box& box) const {
    for (auto& g : constraints_)
      if (g.evaluate(box).lo > 0) return true;
    return false;
  }

  bool feasible(const std::vector<Rational>& point) const {
    for (auto& g : constraints_)
      if (g.evaluate(point) > 0) return false;
    return true;
  }

  Rational value(const std::vector<Rational>& point) const { return p_.evaluate(point); }

 private:
  const MPoly& p_;
  std::vector<MPoly> constraints_;
  std::vector<MPoly> grad_;
};

void sample(const Bounder& b, const Box& box, BBResult& r) {
  const std::size_t d = box.size();
  std::vector<std::vector<Rational>> points;
  std::vector<Rational> centre;
  for (auto& iv : box) centre.push_back(iv.midpoint());
  points.push_back(centre);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<Rational> corner;
    for (std::size_t i = 0; i < d; ++i) corner.push_back((mask >> i) & 1u ? box[i].hi : box[i].lo);
    points.push_back(std::move(corner));
  }
  for (auto& pt : points) {
    if (!b.feasible(pt)) continue;
    Rational v = b.value(pt);
    if (!r.has_lower || v > r.lower) {
      r.lower = v;
      r.argmax = pt;
      r.has_lower = true;
    }
  }
}

}  // namespace

BBResult bb_max_bound(const MPoly& p, const Box& box, const BBOptions& options) {
  if (box.size() != p.variables().size()) throw std::invalid_argument("bb_max_bound: box dimension mismatch");
  if (box.size() > 2) throw std::invalid_argument("bb_max_bound: at most two variables");
  for (auto& iv : box)
    if (iv.lo > iv.hi) throw std::invalid_argument("bb_max_bound: empty box");
  for (auto& g : options.constraints)
    if (g.variables() != p.variables()) throw std::invalid_argument("bb_max_bound: constraint variables differ");
  Bounder b(p, options.constraints);
  BBResult r;
  std::priority_queue<Node, std::vector<Node>, ByBound> queue;
  if (!b.infeasible(box)) {
    queue.push({box, b.upper(box)});
    sample(b, box, r);
  }
  while (!queue.empty()) {
    const Node& top = queue.top();
    r.upper = top.bound;
    if (r.has_lower && r.upper - r.lower <= options.tol) {
      r.converged = true;
      return r;
    }
    if (r.boxes >= options.max_boxes) return r;
    Node node = top;
    queue.pop();
    ++r.boxes;
    // Split the widest side at its midpoint.
    std::size_t axis = 0;
    for (std::size_t i = 1; i < node.box.size(); ++i)
      if (node.box[i].width() > node.box[axis].width()) axis = i;
    const Rational mid = node.box[axis].midpoint();
    for (int side = 0; side < 2; ++side) {
      Box child = node.box;
      if (side == 0) child[axis].hi = mid;
      else child[axis].lo = mid;
      if (b.infeasible(child)) continue;
      sample(b, child, r);
      queue.push({child, b.upper(child)});
    }
  }
  // Every box pruned: the region is empty (or every box was exhausted exactly).
  r.empty_region = !r.has_lower;
  r.converged = r.has_lower;
  if (r.has_lower) r.upper = r.lower;
  return r;
}

BBResult bb_max_bound(const UPoly& p, const Rational& lo, const Rational& hi, const BBOptions& options) {
  const MPoly mp = MPoly::from_univariate({"y"}, "y", p);
  BBOptions opt = options;
  for (auto& g : opt.constraints)
    if (g.variables() != mp.variables()) throw std::invalid_argument("bb_max_bound: univariate constraints must use y");
  return bb_max_bound(mp, Box{Interval(lo, hi)}, opt);
}

}  // namespace symstab
