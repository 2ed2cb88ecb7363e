#include "mig/graph.hpp"

#include "mig/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace mig {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::MonochromaticEdge:
    return "MonochromaticEdge";
  case ErrorKind::InvalidFamily:
    return "InvalidFamily";
  case ErrorKind::LabelMismatch:
    return "LabelMismatch";
  case ErrorKind::WrongBundleKind:
    return "WrongBundleKind";
  case ErrorKind::BadDistance:
    return "BadDistance";
  case ErrorKind::EmptyColorClass:
    return "EmptyColorClass";
  case ErrorKind::TooFewVertices:
    return "TooFewVertices";
  case ErrorKind::BadSpec:
    return "BadSpec";
  case ErrorKind::Parse:
    return "ParseError";
  case ErrorKind::InvalidArgument:
    return "InvalidArgument";
  }
  return "Error";
}

std::vector<std::string> default_labels(std::size_t n, const std::string &prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(prefix + std::to_string(i + 1));
  return out;
}

Graph::Graph(std::size_t n) : Graph(n, default_labels(n)) {}

Graph::Graph(std::size_t n, std::vector<std::string> labels)
    : labels_(std::move(labels)), adj_(n, VertexSet(n)) {
  if (labels_.size() != n)
    throw Error(ErrorKind::InvalidArgument, "label count does not match vertex count");
  std::set<std::string> seen;
  for (const auto &l : labels_)
    if (!seen.insert(l).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate vertex label '" + l + "'");
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
  if (u == v)
    throw Error(ErrorKind::InvalidArgument, "self-loop at " + labels_[u]);
  if (adj_[u].test(v))
    return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (u >= vertex_count() || v >= vertex_count() || !adj_[u].test(v))
    return;
  adj_[u].reset(v);
  adj_[v].reset(u);
  --edge_count_;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = adj_[v];
  s.set(v);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    adj_[u].for_each([&](std::size_t v) {
      if (u < v)
        out.emplace_back(u, v);
    });
  return out;
}

Vertex Graph::find(const std::string &label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return static_cast<Vertex>(it - labels_.begin());
}

Graph complement(const Graph &g) {
  const std::size_t n = g.vertex_count();
  Graph out(n, g.labels());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v))
        out.add_edge(u, v);
  return out;
}

std::vector<int> bfs_distances(const Graph &g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    g.open_neighborhood(u).for_each([&](std::size_t v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

Graph graph_power(const Graph &g, std::size_t d) {
  if (d == 0)
    throw Error(ErrorKind::InvalidArgument, "graph_power needs d >= 1");
  const std::size_t n = g.vertex_count();
  Graph out(n, g.labels());
  for (Vertex u = 0; u < n; ++u) {
    auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < n; ++v)
      if (dist[v] >= 1 && static_cast<std::size_t>(dist[v]) <= d)
        out.add_edge(u, v);
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph &g, const VertexSet &alive) {
  std::vector<VertexSet> out;
  VertexSet todo = alive;
  const std::size_t n = g.vertex_count();
  VertexSet frontier(n), next(n);
  while (todo.any()) {
    VertexSet comp(n);
    frontier.clear();
    frontier.set(todo.first());
    while (frontier.any()) {
      comp |= frontier;
      todo -= frontier;
      next.clear();
      frontier.for_each([&](std::size_t v) { next |= g.open_neighborhood(v); });
      next &= todo;
      frontier.assign(next);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph &g) {
  std::vector<std::vector<Vertex>> out;
  for (const auto &c : connected_components(g, VertexSet::full(g.vertex_count())))
    out.push_back(c.members());
  return out;
}

bool is_connected(const Graph &g, const VertexSet &subset) {
  if (subset.none())
    return true;
  return connected_components(g, subset).size() == 1;
}

Graph induced_subgraph(const Graph &g, const std::vector<Vertex> &subset) {
  std::vector<Vertex> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::string> labels;
  for (Vertex v : sorted)
    labels.push_back(g.label(v));
  Graph out(sorted.size(), std::move(labels));
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b)
      if (g.adjacent(sorted[a], sorted[b]))
        out.add_edge(a, b);
  return out;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v)
    g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3)
    g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

std::size_t choose2(std::size_t k) { return k * (k - (k > 0 ? 1 : 0)) / 2; }

std::size_t ColoredGraph::pair_index(int i, int j) const {
  // Row-major over i < j.
  const auto ui = static_cast<std::size_t>(i - 1), uj = static_cast<std::size_t>(j - 1);
  return ui * k - ui * (ui + 1) / 2 + (uj - ui - 1);
}

ColoredGraph canonicalize_colored(const Graph &g, const std::vector<int> &colors, std::size_t k) {
  return canonicalize_colored(g, g.edges(), colors, k);
}

ColoredGraph canonicalize_colored(const Graph &g, const std::vector<Edge> &input_edges, const std::vector<int> &colors,
                                  std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (colors.size() != n)
    throw Error(ErrorKind::InvalidArgument, "color count does not match vertex count");
  int max_color = 0;
  for (int c : colors) {
    if (c < 1)
      throw Error(ErrorKind::InvalidArgument, "colors must be >= 1");
    max_color = std::max(max_color, c);
  }
  if (k == 0)
    k = static_cast<std::size_t>(max_color);
  if (static_cast<std::size_t>(max_color) > k)
    throw Error(ErrorKind::InvalidArgument, "color exceeds k");

  for (auto [u, v] : input_edges)
    if (colors[u] == colors[v])
      throw Error(ErrorKind::MonochromaticEdge,
                  "edge " + g.label(u) + "-" + g.label(v) + " joins two vertices of color " + std::to_string(colors[u]));

  ColoredGraph cg;
  cg.k = k;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return colors[a] < colors[b]; });
  std::vector<Vertex> position(n);
  for (std::size_t i = 0; i < n; ++i)
    position[order[i]] = i;

  std::vector<std::string> labels;
  for (Vertex v : order)
    labels.push_back(g.label(v));
  cg.graph = Graph(n, std::move(labels));
  cg.original_index = order;
  for (Vertex v : order)
    cg.colors.push_back(colors[v]);

  std::vector<std::size_t> eorder(input_edges.size());
  std::iota(eorder.begin(), eorder.end(), 0);
  auto pair_key = [&](std::size_t e) {
    int a = colors[input_edges[e].first], b = colors[input_edges[e].second];
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  std::stable_sort(eorder.begin(), eorder.end(), [&](std::size_t a, std::size_t b) { return pair_key(a) < pair_key(b); });
  for (std::size_t e : eorder) {
    Vertex u = position[input_edges[e].first], v = position[input_edges[e].second];
    if (cg.colors[u] > cg.colors[v])
      std::swap(u, v);
    cg.edge_list.emplace_back(u, v);
    cg.edge_original_index.push_back(e);
    cg.graph.add_edge(u, v);
  }

  cg.color_range.assign(k, {});
  std::size_t cursor = 0;
  for (std::size_t c = 1; c <= k; ++c) {
    ColoredGraph::Range r{cursor, cursor};
    while (r.end < n && static_cast<std::size_t>(cg.colors[r.end]) == c)
      ++r.end;
    cg.color_range[c - 1] = r;
    cursor = r.end;
  }
  cg.pair_range.assign(choose2(k), {});
  cursor = 0;
  for (int i = 1; i <= static_cast<int>(k); ++i)
    for (int j = i + 1; j <= static_cast<int>(k); ++j) {
      ColoredGraph::Range r{cursor, cursor};
      while (r.end < cg.edge_list.size() && cg.colors[cg.edge_list[r.end].first] == i &&
             cg.colors[cg.edge_list[r.end].second] == j)
        ++r.end;
      cg.pair_range[cg.pair_index(i, j)] = r;
      cursor = r.end;
    }
  return cg;
}

RBInstance make_rb_instance(std::size_t k, std::vector<int> red_colors, std::size_t blue_count,
                            std::vector<std::pair<std::size_t, std::size_t>> edges) {
  RBInstance rb;
  rb.k = k;
  for (int c : red_colors)
    if (c < 1 || static_cast<std::size_t>(c) > k)
      throw Error(ErrorKind::InvalidArgument, "red color outside 1..k");
  rb.red_colors = std::move(red_colors);
  rb.blue_count = blue_count;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [r, b] : edges) {
    if (r >= rb.red_count() || b >= blue_count)
      throw Error(ErrorKind::InvalidArgument, "red-blue edge endpoint out of range");
    if (seen.insert({r, b}).second)
      rb.edges.emplace_back(r, b);
  }
  rb.red_labels = default_labels(rb.red_count(), "v");
  rb.blue_labels = default_labels(blue_count, "b");
  return rb;
}

RBInstance canonicalize_rb(const RBInstance &rb) {
  std::vector<std::size_t> order(rb.red_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rb.red_colors[a] < rb.red_colors[b]; });
  std::vector<std::size_t> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    position[order[i]] = i;
  RBInstance out = rb;
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.red_colors[i] = rb.red_colors[order[i]];
    out.red_labels[i] = rb.red_labels[order[i]];
  }
  for (auto &[r, b] : out.edges)
    r = position[r];
  return out;
}

} // namespace mig
