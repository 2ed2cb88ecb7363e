#include "mig/solvers.hpp"
#include "mig/verify.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace mig;

namespace {

Graph from_edges(std::size_t n, const std::vector<Edge> &edges) {
  Graph g(n, default_labels(n));
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

Graph star(std::size_t leaves) {
  Graph g(leaves + 1, default_labels(leaves + 1));
  for (Vertex v = 1; v <= leaves; ++v)
    g.add_edge(0, v);
  return g;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64 &rng) {
  Graph g(n, default_labels(n));
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng))
        g.add_edge(u, v);
  return g;
}

// Smallest number of cliques covering V: f(S) = 1 + min f(S - C) over cliques
// C inside S that contain the lowest vertex of S.
std::size_t partition_number(const Graph &g) {
  const std::size_t n = g.vertex_count();
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<bool> clique(full + 1, true);
  for (std::size_t s = 0; s <= full; ++s)
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if ((s >> u & 1) && (s >> v & 1) && !g.adjacent(u, v))
          clique[s] = false;
  std::vector<std::size_t> f(full + 1, n + 1);
  f[0] = 0;
  for (std::size_t s = 1; s <= full; ++s) {
    const std::size_t low = s & (~s + 1);
    for (std::size_t c = s; c != 0; c = (c - 1) & s)
      if ((c & low) && clique[c])
        f[s] = std::min(f[s], 1 + f[s & ~c]);
  }
  return f[full];
}

} // namespace

TEST_CASE("multicolored clique") {
  const auto r = solve_multicolored_clique(sample_colored_instance());
  CHECK(r.feasible());
  CHECK(r.witness == std::vector<Vertex>{0, 2, 3});
  CHECK(is_multicolored_clique(sample_colored_instance(), r.witness));
  const ColoredGraph one = canonicalize_colored(Graph(1, default_labels(1)), {1}, 1);
  CHECK(solve_multicolored_clique(one).feasible());
  CHECK_FALSE(solve_multicolored_clique(sample_colored_without(1)).feasible());
}

TEST_CASE("dominating set examples") {
  CHECK(solve_domset(complete_graph(3), 1).feasible());
  CHECK_FALSE(solve_domset(path_graph(4), 1).feasible());
  const auto r = solve_domset(path_graph(4), 2);
  CHECK(r.feasible());
  CHECK(is_dominating_set(path_graph(4), r.witness));
  const auto s = solve_domset(star(5), 1, DomVariant::Independent);
  CHECK(s.feasible());
  CHECK(s.witness == std::vector<Vertex>{0});
  CHECK(solve_domset(path_graph(4), 2, DomVariant::Connected).feasible());
  const auto ind = solve_domset(path_graph(4), 2, DomVariant::Independent, true);
  CHECK(ind.feasible());
  CHECK(satisfies_variant(path_graph(4), ind.witness, DomVariant::Independent));
  CHECK_FALSE(solve_domset(complete_graph(4), 2, DomVariant::Independent, true).feasible());
}

TEST_CASE("distance domination examples") {
  const auto r = solve_distance_domset(path_graph(5), 1, 2);
  CHECK(r.feasible());
  CHECK(r.witness == std::vector<Vertex>{2});
  CHECK_FALSE(solve_distance_domset(path_graph(5), 1, 1).feasible());
  CHECK(solve_distance_domset(cycle_graph(7), 1, 3).feasible());
}

TEST_CASE("perfect code examples") {
  CHECK(solve_perfect_code(complete_graph(4), 1).feasible());
  const auto r = solve_perfect_code(path_graph(4), 2);
  CHECK(r.feasible());
  CHECK(r.witness == std::vector<Vertex>{0, 3});
  for (std::size_t k = 0; k <= 4; ++k)
    CHECK_FALSE(solve_perfect_code(cycle_graph(4), k).feasible());
  CHECK(solve_distance_perfect_code(path_graph(5), 1, 2).witness == std::vector<Vertex>{2});
  CHECK(solve_distance_perfect_code(path_graph(3), 1, 2).feasible());
  CHECK(solve_distance_perfect_code(cycle_graph(4), 1, 2).feasible());
}

TEST_CASE("red blue domination examples") {
  const auto r = solve_rb_domset(sample_rb_instance());
  CHECK(r.feasible());
  CHECK(is_rb_dominating(sample_rb_instance(), r.witness));
  CHECK(solve_rb_domset(make_rb_instance(2, {1, 2}, 0, {})).feasible());
  CHECK_FALSE(solve_rb_domset(make_rb_instance(1, {1}, 2, {{0, 0}})).feasible());
}

TEST_CASE("clique partition examples") {
  CHECK(solve_clique_partition(complete_graph(5), 1).feasible());
  CHECK_FALSE(solve_clique_partition(cycle_graph(5), 2).feasible());
  const auto r = solve_clique_partition(cycle_graph(5), 3);
  CHECK(r.feasible());
  CHECK(is_clique_partition(cycle_graph(5), r.parts));
  CHECK_FALSE(solve_clique_partition(Graph(4, default_labels(4)), 3).feasible());
}

TEST_CASE("separating vertices examples") {
  CHECK(solve_separating(path_graph(3), 1, 1).feasible());
  CHECK_FALSE(solve_separating(complete_graph(5), 1, 2).feasible());
  const Graph triangles = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto r = solve_separating(triangles, 0, 3);
  CHECK(r.feasible());
  CHECK(is_separation(triangles, r.witness, r.side, 3));
  CHECK(solve_cut_connected(path_graph(5), 1, 2).feasible());
  CHECK(solve_cut_components(star(4), 1, 4).feasible());
  CHECK_FALSE(solve_cut_components(complete_graph(4), 2, 2).feasible());
}

TEST_CASE("irredundant examples") {
  CHECK(solve_irredundant(Graph(4, default_labels(4)), 4).feasible());
  CHECK_FALSE(solve_irredundant(complete_graph(3), 2).feasible());
  const auto r = solve_irredundant(path_graph(3), 2);
  CHECK(r.feasible());
  CHECK(is_irredundant(path_graph(3), r.witness));
  CHECK(is_irredundant(path_graph(3), {0, 2}));
}

TEST_CASE("clique examples") {
  CHECK(solve_clique(complete_graph(4), 4).feasible());
  CHECK_FALSE(solve_clique(cycle_graph(5), 3).feasible());
  const auto r = solve_clique(sample_colored_instance().graph, 3);
  CHECK(r.witness == std::vector<Vertex>{0, 2, 3});
}

TEST_CASE("clique partition agrees with direct enumeration up to 7 vertices") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 120; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i) % 7;
    const Graph g = random_graph(n, 0.2 + 0.1 * (i % 6), rng);
    const std::size_t theta = partition_number(g);
    CHECK(clique_partition_number_bruteforce(g) == theta);
    CHECK(solve_clique_partition(g, theta).feasible());
    if (theta > 1)
      CHECK_FALSE(solve_clique_partition(g, theta - 1).feasible());
  }
}

TEST_CASE("monotonicity in k") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_graph(7, 0.35, rng);
    for (std::size_t k = 0; k + 1 <= 7; ++k) {
      if (solve_domset(g, k).feasible())
        CHECK(solve_domset(g, k + 1).feasible());
      if (solve_clique_partition(g, k).feasible())
        CHECK(solve_clique_partition(g, k + 1).feasible());
      if (solve_cut_components(g, k, 2).feasible())
        CHECK(solve_cut_components(g, k + 1, 2).feasible());
    }
  }
}

TEST_CASE("exhausted status is reported, not infeasible") {
  SolveLimits lim;
  lim.max_nodes = 1;
  const auto r = solve_domset(cycle_graph(9), 2, DomVariant::Plain, false, lim);
  CHECK(r.exhausted());
  CHECK_FALSE(r.feasible());
}
