#pragma once

#include "mig/vertex_set.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mig {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph. Vertex identity is the 0-based index; labels are
/// carried for reporting and must be unique.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::vector<std::string> labels);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::string &label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string> &labels() const { return labels_; }

  /// Throws InvalidArgument on self-loops or out-of-range endpoints. Adding an
  /// existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }

  /// N(v)
  const VertexSet &open_neighborhood(Vertex v) const { return adj_[v]; }
  /// N[v] = N(v) + v
  VertexSet closed_neighborhood(Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Index of the vertex with this label, or vertex_count() when absent.
  Vertex find(const std::string &label) const;

  bool operator==(const Graph &o) const { return labels_ == o.labels_ && adj_ == o.adj_; }

private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

std::vector<std::string> default_labels(std::size_t n, const std::string &prefix = "v");

Graph complement(const Graph &g);

/// u ~ v in the result iff 1 <= dist_g(u, v) <= d.
Graph graph_power(const Graph &g, std::size_t d);

std::vector<std::vector<Vertex>> connected_components(const Graph &g);

/// Components of the subgraph induced by `alive`.
std::vector<VertexSet> connected_components(const Graph &g, const VertexSet &alive);

bool is_connected(const Graph &g, const VertexSet &subset);

/// Induced subgraph; vertices keep their relative order and labels.
Graph induced_subgraph(const Graph &g, const std::vector<Vertex> &subset);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph &g, Vertex source);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

/// Graph with a k-coloring. After canonicalization the vertex order is sorted
/// by color and the edge list by color pair, so every color class and color
/// pair class is a contiguous range.
struct ColoredGraph {
  struct Range {
    std::size_t begin = 0; // first index
    std::size_t end = 0;   // one past the last index
    std::size_t size() const { return end - begin; }
    bool empty() const { return begin == end; }
    bool contains(std::size_t i) const { return begin <= i && i < end; }
  };

  Graph graph;
  std::size_t k = 0;
  std::vector<int> colors;            // per vertex, 1..k
  std::vector<Edge> edge_list;        // canonical order, colors[first] < colors[second]
  std::vector<Range> color_range;     // index 0 is color 1
  std::vector<Range> pair_range;      // pair_index(i, j)
  std::vector<Vertex> original_index; // canonical vertex -> input vertex
  std::vector<std::size_t> edge_original_index;

  std::size_t n() const { return graph.vertex_count(); }
  std::size_t m() const { return edge_list.size(); }

  /// Slot of the color pair (i, j), 1 <= i < j <= k, in pair_range.
  std::size_t pair_index(int i, int j) const;
  const Range &vertices_of(int color) const { return color_range[static_cast<std::size_t>(color - 1)]; }
  const Range &edges_of(int i, int j) const { return pair_range[pair_index(i, j)]; }

  /// Position of v inside its color class, 0-based.
  std::size_t row_of(Vertex v) const { return v - vertices_of(colors[v]).begin; }
};

/// Sorts vertices by color and edges by color pair (stable, so input order
/// breaks ties). Throws MonochromaticEdge if an edge joins two vertices of the
/// same color; InvalidArgument if a color is outside 1..k.
ColoredGraph canonicalize_colored(const Graph &g, const std::vector<int> &colors, std::size_t k = 0);

/// Same, with `input_edges` fixing the input edge order (g.edges() is
/// lexicographic). Every listed edge must be an edge of g.
ColoredGraph canonicalize_colored(const Graph &g, const std::vector<Edge> &input_edges, const std::vector<int> &colors,
                                  std::size_t k);

/// Bipartite red/blue instance. Red vertices carry colors 1..k.
struct RBInstance {
  std::size_t k = 0;
  std::vector<int> red_colors;                  // per red vertex
  std::size_t blue_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges; // (red, blue)
  std::vector<std::string> red_labels;
  std::vector<std::string> blue_labels;

  std::size_t red_count() const { return red_colors.size(); }
};

/// Validates the bipartite invariants and fills default labels.
RBInstance make_rb_instance(std::size_t k, std::vector<int> red_colors, std::size_t blue_count,
                            std::vector<std::pair<std::size_t, std::size_t>> edges);

/// Reds sorted by color (stable); edge endpoints remapped accordingly.
RBInstance canonicalize_rb(const RBInstance &rb);

std::size_t choose2(std::size_t k);

} // namespace mig
