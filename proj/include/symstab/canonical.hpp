#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "symstab/graph.hpp"

namespace symstab {

// Isomorphism-class label for graphs on at most 8 vertices: the order plus the
// lexicographically largest adjacency string over colour-refinement-compatible
// relabellings. Bit (P-1-p) of `code` holds the pair with column-order index p,
// where P = C(n,2) and pairs are ordered (0,1),(0,2),(1,2),(0,3),...
struct CanonicalKey {
  std::uint8_t n = 0;
  std::uint32_t code = 0;

  auto operator<=>(const CanonicalKey&) const = default;
  std::string to_string() const;
  Graph to_graph() const;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{k.n} << 32) | k.code);
  }
};

inline constexpr int kMaxCanonicalOrder = 8;

CanonicalKey canonical_key(const Graph& g);

// Canonical key of the labeled graph on n vertices given by an induced_code
// (bit j(j-1)/2+i for pair i<j). Results are memoised.
CanonicalKey canonical_key_of_code(int n, std::uint32_t labeled_code);

}  // namespace symstab
