#include "symstab/finite_partite.hpp"

#include <stdexcept>

#include "symstab/density.hpp"

namespace symstab {

long Blowup::order() const {
  long n = special_count();
  for (auto& c : classes) n += c.size;
  return n;
}

int Blowup::add_class(long size, bool internal_edges, bool adjacent_to_others) {
  const int id = static_cast<int>(classes.size());
  classes.push_back({size, internal_edges});
  for (auto& row : class_adjacent) row.push_back(adjacent_to_others);
  class_adjacent.emplace_back(classes.size(), adjacent_to_others);
  class_adjacent[static_cast<std::size_t>(id)][static_cast<std::size_t>(id)] = false;
  for (auto& row : special_to_class) row.push_back(false);
  return id;
}

int Blowup::add_special(const std::vector<bool>& to_class) {
  if (to_class.size() != classes.size()) throw std::invalid_argument("special adjacency must list every class");
  const int id = special_count();
  special_to_class.push_back(to_class);
  for (auto& row : special_adjacent) row.push_back(false);
  special_adjacent.emplace_back(special_to_class.size(), false);
  return id;
}

void Blowup::set_special_edge(int s, int t, bool present) {
  if (s == t) throw std::invalid_argument("no loops");
  special_adjacent[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = present;
  special_adjacent[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = present;
}

namespace {

struct SumState {
  const ObjectiveSpec& spec;
  const Blowup& g;
  std::vector<int> owner;  // pattern position → class (-1 - s for specials)
  Integer count;
  Rational total;
};

void choose(SumState& st, std::size_t c, int remaining, const Integer& multiplicity) {
  if (remaining == 0 || c == st.g.classes.size()) {
    if (remaining != 0) return;
    const auto& g = st.g;
    const int k = static_cast<int>(st.owner.size());
    std::uint32_t code = 0;
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        const int a = st.owner[static_cast<std::size_t>(i)], b = st.owner[static_cast<std::size_t>(j)];
        bool adj;
        if (a < 0 && b < 0) adj = g.special_adjacent[static_cast<std::size_t>(-1 - a)][static_cast<std::size_t>(-1 - b)];
        else if (a < 0) adj = g.special_to_class[static_cast<std::size_t>(-1 - a)][static_cast<std::size_t>(b)];
        else if (b < 0) adj = g.special_to_class[static_cast<std::size_t>(-1 - b)][static_cast<std::size_t>(a)];
        else if (a == b) adj = g.classes[static_cast<std::size_t>(a)].internal_edges;
        else adj = g.class_adjacent[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (adj) code |= 1u << (j * (j - 1) / 2 + i);
      }
    }
    st.total += st.spec.gamma_of_code(code) * Rational(multiplicity);
    return;
  }
  const long size = st.g.classes[c].size;
  for (int m = 0; m <= remaining && m <= size; ++m) {
    for (int r = 0; r < m; ++r) st.owner.push_back(static_cast<int>(c));
    choose(st, c + 1, remaining - m, multiplicity * binomial(size, m));
    st.owner.resize(st.owner.size() - static_cast<std::size_t>(m));
  }
}

}  // namespace

Rational blowup_sum(const ObjectiveSpec& spec, const Blowup& g) {
  const int k = spec.k();
  const int s = g.special_count();
  if (s > k) throw std::invalid_argument("more special vertices than k");
  SumState st{spec, g, {}, 0, 0};
  for (int i = 0; i < s; ++i) st.owner.push_back(-1 - i);
  choose(st, 0, k - s, Integer(1));
  return st.total;
}

RealisedBlowup realisation_blowup(int n, const PartiteVector& x) {
  auto layout = realisation_layout(n, x);
  RealisedBlowup r;
  for (int size : layout.part_sizes) r.part_class.push_back(size > 0 ? r.graph.add_class(size, false, true) : -1);
  r.clique_class = r.graph.add_class(layout.clique_size, true, true);
  return r;
}

Rational finite_lambda(const ObjectiveSpec& spec, const PartiteVector& x, int n) {
  auto r = realisation_blowup(n, x);
  return blowup_sum(spec, r.graph) / Rational(binomial(n, spec.k()));
}

namespace {

int class_of_index(const RealisedBlowup& r, int i) {
  if (i == 0) return r.clique_class;
  if (i < 1 || i > static_cast<int>(r.part_class.size())) throw std::invalid_argument("index outside supp*(x)");
  const int c = r.part_class[static_cast<std::size_t>(i - 1)];
  if (c < 0) throw std::invalid_argument("part absorbed into the clique at this n");
  return c;
}

// Detaches one vertex of class c as a special vertex.
int detach(Blowup& g, int c) {
  auto& cls = g.classes[static_cast<std::size_t>(c)];
  if (cls.size <= 0) throw std::invalid_argument("class has no vertex to detach");
  --cls.size;
  std::vector<bool> adj(g.classes.size());
  for (std::size_t d = 0; d < g.classes.size(); ++d)
    adj[d] = static_cast<int>(d) == c ? cls.internal_edges : g.class_adjacent[static_cast<std::size_t>(c)][d];
  const int s = g.add_special(adj);
  for (int t = 0; t < s; ++t) {
    // Existing specials see the new one as a member of class c.
    g.set_special_edge(s, t, g.special_to_class[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)]);
  }
  return s;
}

}  // namespace

Rational finite_flip_gradient(const ObjectiveSpec& spec, const PartiteVector& x, int n, int i1, int i2) {
  auto r = realisation_blowup(n, x);
  Blowup g = r.graph;
  const int c1 = class_of_index(r, i1), c2 = class_of_index(r, i2);
  const int s1 = detach(g, c1);
  const int s2 = detach(g, c2);
  Rational before = blowup_sum(spec, g);
  g.set_special_edge(s1, s2, !g.special_adjacent[0][1]);
  Rational after = blowup_sum(spec, g);
  return (before - after) / Rational(binomial(n - 2, spec.k() - 2));
}

Rational finite_attach_value(const ObjectiveSpec& spec, const PartiteVector& x, int n, const std::vector<bool>& b,
                             const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must lie in [0,1]");
  auto r = realisation_blowup(n, x);
  Blowup g = r.graph;
  const long v0 = g.classes[static_cast<std::size_t>(r.clique_class)].size;
  mpz_class joined;
  mpz_fdiv_q(joined.get_mpz_t(), Rational(alpha * v0).get_num_mpz_t(), Rational(alpha * v0).get_den_mpz_t());
  // Split V0 into the joined and unjoined halves.
  g.classes[static_cast<std::size_t>(r.clique_class)].size = joined.get_si();
  const int rest = g.add_class(v0 - joined.get_si(), true, true);
  std::vector<bool> adj(g.classes.size(), false);
  adj[static_cast<std::size_t>(r.clique_class)] = true;
  for (std::size_t i = 0; i < r.part_class.size(); ++i) {
    const int c = r.part_class[i];
    const bool bi = i + 1 < b.size() && b[i + 1];
    if (c >= 0) adj[static_cast<std::size_t>(c)] = bi;
    else if (bi) throw std::invalid_argument("pattern uses a part absorbed into the clique at this n");
  }
  adj[static_cast<std::size_t>(rest)] = false;
  g.add_special(adj);
  return blowup_sum(spec, g) / Rational(binomial(n, spec.k() - 1));
}

}  // namespace symstab
