#include "symstab/canonical.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace symstab {

namespace {

constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

struct Search {
  int n = 0;
  int pairs = 0;
  std::array<std::uint8_t, 8> adj{};   // adjacency rows as bitmasks
  std::array<int, 8> colour{};          // refined colour rank per vertex
  std::array<int, 8> order{};           // vertex placed at each position
  std::array<bool, 8> used{};
  std::uint32_t best = 0;
  bool have_best = false;

  // Bits contributed by column j (pairs (0,j)..(j-1,j)), most significant first.
  std::uint32_t column_bits(int j) const {
    std::uint32_t bits = 0;
    for (int i = 0; i < j; ++i) bits = (bits << 1) | ((adj[order[j]] >> order[i]) & 1u);
    return bits;
  }

  // prefix: code bits for columns 1..pos-1, aligned at the top of `pairs` bits.
  void descend(int pos, std::uint32_t prefix, int used_bits) {
    if (pos == n) {
      if (!have_best || prefix > best) {
        best = prefix;
        have_best = true;
      }
      return;
    }
    // Position pos may take any unused vertex of the smallest remaining colour.
    int want = 1 << 30;
    for (int v = 0; v < n; ++v)
      if (!used[v]) want = std::min(want, colour[v]);
    for (int v = 0; v < n; ++v) {
      if (used[v] || colour[v] != want) continue;
      order[pos] = v;
      used[v] = true;
      int width = pos;
      std::uint32_t bits = column_bits(pos);
      std::uint32_t next = prefix | (width ? bits << (pairs - used_bits - width) : 0);
      int next_used = used_bits + width;
      bool prune = false;
      if (have_best) {
        // Compare the determined top `next_used` bits with the incumbent.
        std::uint32_t mask = next_used == 0 ? 0 : (~std::uint32_t{0} << (pairs - next_used)) & ((pairs == 32) ? ~0u : ((1u << pairs) - 1));
        prune = (next & mask) < (best & mask);
      }
      if (!prune) descend(pos + 1, next, next_used);
      used[v] = false;
    }
  }
};

void refine(Search& s) {
  const int n = s.n;
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) colour[v] = __builtin_popcount(s.adj[v]);
  // Rank initial colours.
  auto rank = [&](const std::vector<std::vector<int>>& sig) {
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      out[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    return std::make_pair(out, static_cast<int>(distinct.size()));
  };
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) sig[v] = {colour[v]};
  auto [ranked, classes] = rank(sig);
  colour = ranked;
  for (;;) {
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if ((s.adj[v] >> u) & 1u) nb.push_back(colour[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].assign(1, colour[v]);
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto [next, next_classes] = rank(sig);
    colour = next;
    if (next_classes == classes) break;
    classes = next_classes;
  }
  for (int v = 0; v < n; ++v) s.colour[v] = colour[v];
}

CanonicalKey compute_key(int n, std::uint32_t labeled_code) {
  Search s;
  s.n = n;
  s.pairs = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((labeled_code >> pair_index(i, j)) & 1u) {
        s.adj[i] |= static_cast<std::uint8_t>(1u << j);
        s.adj[j] |= static_cast<std::uint8_t>(1u << i);
      }
  refine(s);
  s.descend(0, 0, 0);
  return CanonicalKey{static_cast<std::uint8_t>(n), s.best};
}

struct Cache {
  std::mutex mutex;
  std::unordered_map<std::uint64_t, CanonicalKey> map;
};

Cache& cache() {
  static Cache c;
  return c;
}

}  // namespace

std::string CanonicalKey::to_string() const {
  return std::to_string(n) + ":" + std::to_string(code);
}

Graph CanonicalKey::to_graph() const {
  Graph g(n);
  const int pairs = n * (n - 1) / 2;
  int p = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++p)
      if ((code >> (pairs - 1 - p)) & 1u) g.set_edge(i, j, true);
  return g;
}

CanonicalKey canonical_key_of_code(int n, std::uint32_t labeled_code) {
  if (n < 0 || n > kMaxCanonicalOrder) throw std::invalid_argument("canonical_key: order must be at most 8");
  if (n <= 1) return CanonicalKey{static_cast<std::uint8_t>(n), 0};
  std::uint64_t slot = (std::uint64_t{static_cast<unsigned>(n)} << 32) | labeled_code;
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.map.find(slot); it != c.map.end()) return it->second;
  }
  CanonicalKey key = compute_key(n, labeled_code);
  std::lock_guard lock(c.mutex);
  c.map.emplace(slot, key);
  return key;
}

CanonicalKey canonical_key(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) throw std::invalid_argument("canonical_key: order must be at most 8");
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  return canonical_key_of_code(g.order(), g.induced_code(all));
}

}  // namespace symstab
