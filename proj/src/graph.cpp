#include "symstab/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace symstab {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxOrder) throw std::invalid_argument("graph order must lie in [0,64]");
}

Graph Graph::empty(int n) { return Graph(n); }

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v, true);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  for (int v = 0; v < n; ++v) g.set_edge(v, (v + 1) % n, true);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1, true);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.set_edge(u, v, true);
  return g;
}

Graph Graph::complete_partite(std::span<const int> part_sizes) {
  int n = 0;
  for (int s : part_sizes) {
    if (s <= 0) throw std::invalid_argument("part sizes must be positive");
    n += s;
  }
  Graph g(n);
  std::vector<int> part_of;
  for (std::size_t i = 0; i < part_sizes.size(); ++i)
    part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[i]), static_cast<int>(i));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.set_edge(u, v, true);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(rows_[v]);
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

void Graph::set_edge(int u, int v, bool present) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
  if (present) {
    rows_[u] |= bv;
    rows_[v] |= bu;
  } else {
    rows_[u] &= ~bv;
    rows_[v] &= ~bu;
  }
}

Graph Graph::flipped(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) throw std::invalid_argument("flip needs two distinct vertices");
  Graph g = *this;
  g.set_edge(x, y, !adjacent(x, y));
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) g.set_edge(u, v, true);
  return g;
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v);
  std::vector<int> keep;
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        g.set_edge(static_cast<int>(i), static_cast<int>(j), true);
  }
  return g;
}

std::uint32_t Graph::induced_code(std::span<const int> vertices) const {
  std::uint32_t code = 0;
  int bit = 0;
  for (std::size_t j = 1; j < vertices.size(); ++j) {
    std::uint64_t rj = rows_[vertices[j]];
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if ((rj >> vertices[i]) & 1u) code |= std::uint32_t{1} << bit;
  }
  return code;
}

Graph flip(const Graph& g, int x, int y) { return g.flipped(x, y); }

int symmetric_difference_size(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw std::invalid_argument("orders differ");
  int twice = 0;
  for (int v = 0; v < a.order(); ++v) twice += std::popcount(a.row(v) ^ b.row(v));
  return twice / 2;
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::optional<Graph> g;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("graph line " + std::to_string(line_no) + ": " + why);
    };
    if (!g) {
      int n;
      if (first != "n" || !(ls >> n)) fail("expected 'n <count>'");
      if (n < 0 || n > Graph::kMaxOrder) fail("order outside [0,64]");
      g.emplace(n);
    } else {
      int u, v;
      try {
        u = std::stoi(first);
      } catch (...) {
        fail("expected 'u v'");
      }
      if (!(ls >> v)) fail("expected 'u v'");
      if (u < 0 || v < 0 || u >= g->order() || v >= g->order() || u == v) fail("bad edge");
      g->set_edge(u, v, true);
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
  }
  if (!g) throw std::invalid_argument("graph: missing header");
  return *g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

int CompletePartiteShape::order() const {
  int n = 0;
  for (int s : part_sizes) n += s;
  return n;
}

int CompletePartiteShape::singleton_count() const {
  return static_cast<int>(std::count(part_sizes.begin(), part_sizes.end(), 1));
}

CompletePartiteShape make_shape(std::vector<int> sizes) {
  for (int s : sizes)
    if (s <= 0) throw std::invalid_argument("part sizes must be positive");
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return CompletePartiteShape{std::move(sizes)};
}

Graph shape_graph(const CompletePartiteShape& shape) {
  return Graph::complete_partite(shape.part_sizes);
}

std::optional<std::vector<std::vector<int>>> complete_partite_parts(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> parts;
  for (int v = 0; v < n; ++v) {
    if (label[v] >= 0) continue;
    // Non-neighbourhood of v (including v) must be an independent twin class.
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::uint64_t non_nb = all & ~g.row(v);
    std::vector<int> part;
    for (int u = v; u < n; ++u)
      if ((non_nb >> u) & 1u) part.push_back(u);
    for (int u : part) {
      if (label[u] >= 0) return std::nullopt;
      if (g.row(u) != g.row(v)) return std::nullopt;
      label[u] = static_cast<int>(parts.size());
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::optional<CompletePartiteShape> complete_partite_shape_of(const Graph& g) {
  auto parts = complete_partite_parts(g);
  if (!parts) return std::nullopt;
  std::vector<int> sizes;
  for (auto& p : *parts) sizes.push_back(static_cast<int>(p.size()));
  return make_shape(std::move(sizes));
}

Graph attach(const Graph& g, const std::vector<std::vector<int>>& parts,
             const std::vector<int>& clique, const std::vector<bool>& b, long clique_neighbours) {
  const int n = g.order();
  if (b.size() != parts.size()) throw std::invalid_argument("attach: pattern length differs from part count");
  if (clique_neighbours < 0 || clique_neighbours > static_cast<long>(clique.size()))
    throw std::invalid_argument("attach: clique neighbour count out of range");
  // Partition consistency: parts and clique cover V(g) exactly and match g's structure.
  std::vector<int> part_of(static_cast<std::size_t>(n), -2);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) {
      if (v < 0 || v >= n || part_of[v] != -2) throw std::invalid_argument("attach: partition inconsistent with graph");
      part_of[v] = static_cast<int>(i);
    }
  for (int v : clique) {
    if (v < 0 || v >= n || part_of[v] != -2) throw std::invalid_argument("attach: partition inconsistent with graph");
    part_of[v] = -1;
  }
  for (int u = 0; u < n; ++u) {
    if (part_of[u] == -2) throw std::invalid_argument("attach: partition inconsistent with graph");
    for (int v = u + 1; v < n; ++v) {
      bool expect = part_of[u] == -1 || part_of[u] != part_of[v];
      if (g.adjacent(u, v) != expect) throw std::invalid_argument("attach: partition inconsistent with graph");
    }
  }
  if (n + 1 > Graph::kMaxOrder) throw std::invalid_argument("attach: order would exceed 64");
  Graph out(n + 1);
  for (auto [u, v] : g.edges()) out.set_edge(u, v, true);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (b[i])
      for (int v : parts[i]) out.set_edge(n, v, true);
  std::vector<int> sorted_clique = clique;
  std::sort(sorted_clique.begin(), sorted_clique.end());
  for (long j = 0; j < clique_neighbours; ++j) out.set_edge(n, sorted_clique[static_cast<std::size_t>(j)], true);
  return out;
}

}  // namespace symstab
