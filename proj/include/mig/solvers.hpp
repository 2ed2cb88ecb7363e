#pragma once

#include "mig/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mig {

enum class SolveStatus { Feasible, Infeasible, Exhausted };

const char *to_string(SolveStatus s);

struct SolveLimits {
  std::uint64_t max_nodes = 400'000'000; // 0 disables the cap
  double max_seconds = 0;                // 0 disables the cap
};

struct SolveReport {
  std::string problem;
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<Vertex> witness;              // sorted
  std::vector<Vertex> side;                 // X of a separation
  std::vector<std::vector<Vertex>> parts;   // clique partition
  std::uint64_t nodes_explored = 0;
  SolveLimits limits;

  bool feasible() const { return status == SolveStatus::Feasible; }
  bool exhausted() const { return status == SolveStatus::Exhausted; }
};

enum class DomVariant { Plain, Connected, Independent, Clique };

const char *to_string(DomVariant v);
DomVariant dom_variant_from_string(const std::string &s);

// Checker predicates; they recompute everything from the graph.
bool is_clique(const Graph &g, const std::vector<Vertex> &s);
bool is_independent(const Graph &g, const std::vector<Vertex> &s);
bool is_dominating_set(const Graph &g, const std::vector<Vertex> &s);
bool satisfies_variant(const Graph &g, const std::vector<Vertex> &s, DomVariant v);
bool is_perfect_code(const Graph &g, const std::vector<Vertex> &s);
bool is_irredundant(const Graph &g, const std::vector<Vertex> &s);
bool is_clique_partition(const Graph &g, const std::vector<std::vector<Vertex>> &parts);
bool is_multicolored_clique(const ColoredGraph &cg, const std::vector<Vertex> &s);
bool is_rb_dominating(const RBInstance &rb, const std::vector<std::size_t> &reds);
/// No edge between x and V - x - s, |x| == l, s and x disjoint.
bool is_separation(const Graph &g, const std::vector<Vertex> &s, const std::vector<Vertex> &x, std::size_t l);

SolveReport solve_multicolored_clique(const ColoredGraph &cg, const SolveLimits &lim = {});
SolveReport solve_clique(const Graph &g, std::size_t k, const SolveLimits &lim = {});
/// |S| <= k, or |S| == k when exact_size is set.
SolveReport solve_domset(const Graph &g, std::size_t k, DomVariant variant = DomVariant::Plain,
                         bool exact_size = false, const SolveLimits &lim = {});
SolveReport solve_distance_domset(const Graph &g, std::size_t k, std::size_t d, const SolveLimits &lim = {});
SolveReport solve_perfect_code(const Graph &g, std::size_t k, bool exact_size = true, const SolveLimits &lim = {});
SolveReport solve_distance_perfect_code(const Graph &g, std::size_t k, std::size_t d, bool exact_size = true,
                                        const SolveLimits &lim = {});
/// One red per color 1..rb.k dominating every blue; witness holds red indices.
SolveReport solve_rb_domset(const RBInstance &rb, const SolveLimits &lim = {});
/// Partition into at most k cliques, searched as a coloring of the complement
/// whose color classes are grown to maximal independent sets.
SolveReport solve_clique_partition(const Graph &g, std::size_t k, const SolveLimits &lim = {});
/// Minimum number of cliques covering V by exhaustive set-partition
/// enumeration; reference for small graphs only (n <= 10).
std::size_t clique_partition_number_bruteforce(const Graph &g);
SolveReport solve_separating(const Graph &g, std::size_t k, std::size_t l, const SolveLimits &lim = {});
SolveReport solve_cut_connected(const Graph &g, std::size_t k, std::size_t l, const SolveLimits &lim = {});
SolveReport solve_cut_components(const Graph &g, std::size_t k, std::size_t l, const SolveLimits &lim = {});
/// Irredundant set of size exactly k (or at least k when exact_size is off;
/// irredundance is hereditary so both answers coincide).
SolveReport solve_irredundant(const Graph &g, std::size_t k, bool exact_size = true, const SolveLimits &lim = {});

} // namespace mig
