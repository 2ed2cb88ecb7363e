#include "mig/generators.hpp"

#include "mig/errors.hpp"
#include "mig/solvers.hpp"

#include <algorithm>
#include <random>

namespace mig {

const char *to_string(Planted p) {
  switch (p) {
  case Planted::Yes:
    return "yes";
  case Planted::No:
    return "no";
  case Planted::Random:
    return "random";
  }
  return "?";
}

Planted planted_from_string(const std::string &s) {
  for (auto p : {Planted::Yes, Planted::No, Planted::Random})
    if (s == to_string(p))
      return p;
  throw Error(ErrorKind::BadSpec, "planted must be yes, no or random, got '" + s + "'");
}

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng &rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorKind::BadSpec, "edge probability must lie in [0, 1]");
}

std::size_t pair_edge_count(const Graph &g, const std::vector<int> &colors, int a, int b) {
  std::size_t c = 0;
  for (auto [u, v] : g.edges()) {
    const int cu = colors[u], cv = colors[v];
    if ((cu == a && cv == b) || (cu == b && cv == a))
      ++c;
  }
  return c;
}

// One attempt; returns false when the planted answer could not be produced.
bool try_colored(const GenSpec &spec, Rng &rng, Graph &g, std::vector<int> &colors) {
  const std::size_t n = spec.n, k = spec.k;
  colors.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    colors[v] = v < k ? static_cast<int>(v + 1) : static_cast<int>(1 + pick(rng, k));
  g = Graph(n, default_labels(n));
  std::bernoulli_distribution coin(spec.edge_probability);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (colors[u] != colors[v] && coin(rng))
        g.add_edge(u, v);

  std::vector<std::vector<Vertex>> cls(k + 1);
  for (Vertex v = 0; v < n; ++v)
    cls[static_cast<std::size_t>(colors[v])].push_back(v);
  if (spec.nonempty_pairs)
    for (int i = 1; i <= int(k); ++i)
      for (int j = i + 1; j <= int(k); ++j)
        if (pair_edge_count(g, colors, i, j) == 0)
          g.add_edge(cls[std::size_t(i)][pick(rng, cls[std::size_t(i)].size())],
                     cls[std::size_t(j)][pick(rng, cls[std::size_t(j)].size())]);
  if (spec.planted == Planted::Random)
    return true;

  std::vector<Vertex> clique;
  for (std::size_t c = 1; c <= k; ++c)
    clique.push_back(cls[c][pick(rng, cls[c].size())]);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      g.add_edge(clique[a], clique[b]);
  if (spec.planted == Planted::Yes)
    return true;

  // Remove clique edges until no multicolored clique is left.
  for (int round = 0; round < 1000; ++round) {
    std::vector<Edge> removable;
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        const Vertex u = clique[a], v = clique[b];
        if (!spec.nonempty_pairs || pair_edge_count(g, colors, colors[u], colors[v]) > 1)
          removable.push_back({u, v});
      }
    if (removable.empty())
      return false;
    auto [u, v] = removable[pick(rng, removable.size())];
    g.remove_edge(u, v);
    auto cg = canonicalize_colored(g, colors, k);
    auto r = solve_multicolored_clique(cg);
    if (!r.feasible())
      return true;
    clique.clear();
    for (auto w : r.witness)
      clique.push_back(cg.original_index[w]);
  }
  return false;
}

} // namespace

ColoredGraph gen_colored_graph(const GenSpec &spec) {
  if (spec.k == 0 || spec.n < spec.k)
    throw Error(ErrorKind::BadSpec, "need n >= k >= 1, got n = " + std::to_string(spec.n) + ", k = " +
                                        std::to_string(spec.k));
  check_probability(spec.edge_probability);
  if (spec.planted == Planted::No && spec.k == 1)
    throw Error(ErrorKind::BadSpec, "every 1-colored graph with a vertex has a multicolored clique");
  Rng rng(spec.seed);
  Graph g;
  std::vector<int> colors;
  for (int attempt = 0; attempt < 64; ++attempt)
    if (try_colored(spec, rng, g, colors))
      return canonicalize_colored(g, colors, spec.k);
  throw Error(ErrorKind::BadSpec, "could not produce a planted no-instance for this spec");
}

RBInstance gen_rb_instance(std::size_t n_red, std::size_t k, std::size_t n_blue, double p, Planted planted,
                           std::uint64_t seed) {
  if (k == 0 || n_red < k)
    throw Error(ErrorKind::BadSpec, "need n_red >= k >= 1");
  check_probability(p);
  if (planted == Planted::No && n_blue == 0)
    throw Error(ErrorKind::BadSpec, "an instance without blue vertices is always a yes-instance");
  Rng rng(seed);
  std::vector<int> colors(n_red);
  for (std::size_t v = 0; v < n_red; ++v)
    colors[v] = v < k ? static_cast<int>(v + 1) : static_cast<int>(1 + pick(rng, k));
  std::vector<std::vector<bool>> adj(n_red, std::vector<bool>(n_blue, false));
  std::bernoulli_distribution coin(p);
  for (std::size_t r = 0; r < n_red; ++r)
    for (std::size_t b = 0; b < n_blue; ++b)
      adj[r][b] = coin(rng);
  auto build = [&]() {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t r = 0; r < n_red; ++r)
      for (std::size_t b = 0; b < n_blue; ++b)
        if (adj[r][b])
          edges.push_back({r, b});
    return make_rb_instance(k, colors, n_blue, edges);
  };
  if (planted == Planted::Random)
    return build();

  std::vector<std::vector<std::size_t>> cls(k + 1);
  for (std::size_t r = 0; r < n_red; ++r)
    cls[static_cast<std::size_t>(colors[r])].push_back(r);
  std::vector<std::size_t> chosen;
  for (std::size_t c = 1; c <= k; ++c)
    chosen.push_back(cls[c][pick(rng, cls[c].size())]);
  for (std::size_t b = 0; b < n_blue; ++b) {
    bool covered = false;
    for (auto r : chosen)
      covered = covered || adj[r][b];
    if (!covered)
      adj[chosen[pick(rng, chosen.size())]][b] = true;
  }
  if (planted == Planted::Yes)
    return build();

  // Uncover one blue of each witness the oracle still finds.
  while (true) {
    const std::size_t b = pick(rng, n_blue);
    for (auto r : chosen)
      adj[r][b] = false;
    auto rb = build();
    auto rep = solve_rb_domset(rb);
    if (!rep.feasible())
      return rb;
    chosen = rep.witness;
  }
}

Graph pad_isolated(const Graph &g, std::size_t n) {
  if (g.vertex_count() >= n)
    return g;
  auto labels = g.labels();
  std::size_t next = g.vertex_count();
  while (labels.size() < n) {
    std::string l = "v" + std::to_string(++next);
    while (g.find(l) != g.vertex_count())
      l = "v" + std::to_string(++next);
    labels.push_back(l);
  }
  Graph out(n, labels);
  for (auto [u, v] : g.edges())
    out.add_edge(u, v);
  return out;
}

} // namespace mig
