#pragma once

#include "mig/graph.hpp"

#include <cstdint>
#include <string>

namespace mig {

enum class Planted { Yes, No, Random };

const char *to_string(Planted p);
Planted planted_from_string(const std::string &s);

struct GenSpec {
  std::size_t n = 4;
  std::size_t k = 2;
  double edge_probability = 0.5;
  Planted planted = Planted::Random;
  std::uint64_t seed = 1;
  /// Guarantee at least one edge between every two color classes.
  bool nonempty_pairs = false;
};

/// Random k-colored graph; every color class is non-empty. Planted yes
/// instances contain a multicolored clique, planted no instances are yes
/// instances with one clique edge removed (repeated until the oracle refutes).
/// Throws BadSpec when n < k, k == 0, p is outside [0, 1], or the planted
/// answer cannot be produced.
ColoredGraph gen_colored_graph(const GenSpec &spec);

/// Random red/blue instance with n_red reds over k non-empty colors.
RBInstance gen_rb_instance(std::size_t n_red, std::size_t k, std::size_t n_blue, double p, Planted planted,
                           std::uint64_t seed);

/// `g` with isolated vertices appended until it has at least `n` vertices.
Graph pad_isolated(const Graph &g, std::size_t n);

} // namespace mig
