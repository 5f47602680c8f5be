#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symstab {

// Simple graph on at most 64 vertices; row v holds the neighbourhood of v.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int n);

  static Graph empty(int n);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  // Complete partite graph with parts laid out consecutively in the given order.
  static Graph complete_partite(std::span<const int> part_sizes);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
  std::uint64_t row(int v) const { return rows_[v]; }
  int degree(int v) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  void set_edge(int u, int v, bool present);

  Graph flipped(int x, int y) const;
  Graph complement() const;
  Graph without_vertex(int v) const;
  Graph induced(std::span<const int> vertices) const;
  // Labeled code of G[vertices]: bit j(j-1)/2 + i is set iff positions i<j are adjacent.
  std::uint32_t induced_code(std::span<const int> vertices) const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

// G ⊕ xy.
Graph flip(const Graph& g, int x, int y);

// Number of unordered pairs that differ between two graphs on the same vertex set.
int symmetric_difference_size(const Graph& a, const Graph& b);

// Graph text format: "n <count>" then "u v" lines; '#' comments and blank lines ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// Non-increasing part sizes; size-1 parts are the clique vertices V0.
struct CompletePartiteShape {
  std::vector<int> part_sizes;

  int order() const;
  int singleton_count() const;
  bool operator==(const CompletePartiteShape&) const = default;
};

CompletePartiteShape make_shape(std::vector<int> sizes);
Graph shape_graph(const CompletePartiteShape& shape);

// Parts of g (each sorted, parts ordered by smallest member) if g is complete
// partite, otherwise nothing.
std::optional<std::vector<std::vector<int>>> complete_partite_parts(const Graph& g);
std::optional<CompletePartiteShape> complete_partite_shape_of(const Graph& g);

// G +_{b,alpha} u. `parts` are the independent parts V_1..V_m of g and
// `clique` lists V0 (vertices in singleton parts). The new vertex is appended
// last; it is joined to every vertex of parts[i] with b[i] true and to the
// floor(alpha·|V0|) lowest-indexed clique vertices.
Graph attach(const Graph& g, const std::vector<std::vector<int>>& parts,
             const std::vector<int>& clique, const std::vector<bool>& b, long clique_neighbours);

}  // namespace symstab
