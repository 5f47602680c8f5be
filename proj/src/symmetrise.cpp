#include "symstab/symmetrise.hpp"

#include <algorithm>
#include "json.hpp"

namespace symstab {

namespace {

Graph make_clone(const Graph& g, int x, int y) {
  Graph h = g;
  for (int v = 0; v < g.order(); ++v)
    if (v != x && v != y) h.set_edge(y, v, g.adjacent(x, v));
  h.set_edge(x, y, false);
  return h;
}

// Λ after replacing g by h, where the two differ only in pairs at vertex v.
Rational updated_total(const ObjectiveSpec& spec, const Rational& total, const Graph& g, const Graph& h, int v) {
  return total - lambda_sum_containing(spec, g, {v}) + lambda_sum_containing(spec, h, {v});
}

void check_eligible_step(const ObjectiveSpec& spec, const Rational& before, const Rational& after) {
  if (after < before) {
    if (spec.symmetrisation_eligible())
      throw std::logic_error("symmetrisation decreased lambda for an eligible spec");
    throw SymmetrisationError("no monotone clone available");
  }
}

}  // namespace

SymmetrisationTrace symmetrise_full(const ObjectiveSpec& spec, const Graph& g) {
  const int n = g.order();
  if (n < spec.k()) throw std::invalid_argument("symmetrise: v(G) < k");
  if (n > kMaxSymmetriseOrder) throw std::invalid_argument("symmetrise: v(G) > 24");
  SymmetrisationTrace trace;
  trace.initial_graph = g;
  Graph cur = g;
  const Rational norm(binomial(n, spec.k()));
  Rational total = lambda_graph(spec, cur).total;

  for (;;) {
    // Non-adjacent twin classes, in decreasing size, then by smallest member.
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      int c = v;
      for (int u = 0; u < v; ++u)
        if (!cur.adjacent(u, v) && cur.row(u) == cur.row(v)) {
          c = u;
          break;
        }
      classes[static_cast<std::size_t>(c)].push_back(v);
    }
    std::vector<int> ids;
    for (int c = 0; c < n; ++c)
      if (!classes[static_cast<std::size_t>(c)].empty()) ids.push_back(c);
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
      const auto& A = classes[static_cast<std::size_t>(a)];
      const auto& B = classes[static_cast<std::size_t>(b)];
      if (A.size() != B.size()) return A.size() > B.size();
      return A.front() < B.front();
    });
    int x = -1, y = -1;
    for (std::size_t i = 0; i < ids.size() && x < 0; ++i)
      for (std::size_t j = i + 1; j < ids.size() && x < 0; ++j)
        for (int a : classes[static_cast<std::size_t>(ids[i])]) {
          for (int b : classes[static_cast<std::size_t>(ids[j])])
            if (!cur.adjacent(a, b)) {
              x = a;
              y = b;
              break;
            }
          if (x >= 0) break;
        }
    if (x < 0) break;

    const Graph gxy = make_clone(cur, x, y);  // y joins x's class
    const Graph gyx = make_clone(cur, y, x);  // x joins y's class
    const Rational txy = updated_total(spec, total, cur, gxy, y);
    const Rational tyx = updated_total(spec, total, cur, gyx, x);
    // Ties clone from the larger class, which x's class is by the scan order.
    const bool forward = txy >= tyx;
    const int from = forward ? x : y, to = forward ? y : x;
    const Graph& next = forward ? gxy : gyx;
    const Rational next_total = forward ? txy : tyx;
    check_eligible_step(spec, total, next_total);
    trace.steps.push_back({from, to, total / norm, next_total / norm, symmetric_difference_size(cur, next)});
    cur = next;
    total = next_total;
  }
  trace.final_graph = cur;
  auto shape = complete_partite_shape_of(cur);
  if (!shape) throw std::logic_error("symmetrisation ended on a graph that is not complete partite");
  trace.final_shape = *shape;
  return trace;
}

SymmetrisationTrace symmetrise_vertex(const ObjectiveSpec& spec, const Graph& g, int z) {
  const int n = g.order();
  if (z < 0 || z >= n) throw std::out_of_range("symmetrise_vertex: vertex out of range");
  if (n < spec.k()) throw std::invalid_argument("symmetrise: v(G) < k");
  if (n > kMaxSymmetriseOrder) throw std::invalid_argument("symmetrise: v(G) > 24");
  auto parts_minus = complete_partite_parts(g.without_vertex(z));
  if (!parts_minus) throw std::invalid_argument("symmetrise_vertex: G - z is not complete partite");
  SymmetrisationTrace trace;
  trace.initial_graph = g;
  Graph cur = g;
  const Rational norm(binomial(n, spec.k()));
  Rational total = lambda_graph(spec, cur).total;
  for (auto part : *parts_minus) {
    for (int& v : part)
      if (v >= z) ++v;  // back to indices of g
    for (;;) {
      std::vector<int> in, out;
      for (int v : part) (cur.adjacent(z, v) ? in : out).push_back(v);
      if (in.empty() || out.empty()) break;
      const int x = in.front(), y = out.front();
      const Graph gxy = cur.flipped(z, y);  // y becomes a clone of x
      const Graph gyx = cur.flipped(z, x);  // x becomes a clone of y
      const Rational txy = updated_total(spec, total, cur, gxy, z);
      const Rational tyx = updated_total(spec, total, cur, gyx, z);
      bool forward;
      if (txy != tyx) forward = txy > tyx;
      else forward = in.size() >= out.size();
      const Rational next_total = forward ? txy : tyx;
      check_eligible_step(spec, total, next_total);
      const Graph& next = forward ? gxy : gyx;
      trace.steps.push_back(
          {forward ? x : y, forward ? y : x, total / norm, next_total / norm, symmetric_difference_size(cur, next)});
      cur = next;
      total = next_total;
    }
  }
  trace.final_graph = cur;
  if (auto shape = complete_partite_shape_of(cur)) trace.final_shape = *shape;
  return trace;
}

std::string trace_to_json(const SymmetrisationTrace& trace) {
  nlohmann::json j;
  j["steps"] = nlohmann::json::array();
  for (auto& s : trace.steps)
    j["steps"].push_back({{"from", s.from},
                          {"to", s.to},
                          {"lambda_before", to_string(s.lambda_before)},
                          {"lambda_after", to_string(s.lambda_after)},
                          {"pairs_edited", s.pairs_edited}});
  j["step_count"] = trace.steps.size();
  j["final_order"] = trace.final_graph.order();
  j["final_edges"] = nlohmann::json::array();
  for (auto& [u, v] : trace.final_graph.edges()) j["final_edges"].push_back({u, v});
  j["final_shape"] = trace.final_shape.part_sizes;
  return j.dump(2);
}

}  // namespace symstab
