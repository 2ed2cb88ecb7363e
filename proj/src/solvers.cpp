#include "mig/solvers.hpp"

#include "mig/errors.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <unordered_map>

namespace mig {

const char *to_string(SolveStatus s) {
  switch (s) {
  case SolveStatus::Feasible:
    return "feasible";
  case SolveStatus::Infeasible:
    return "infeasible";
  case SolveStatus::Exhausted:
    return "exhausted";
  }
  return "?";
}

const char *to_string(DomVariant v) {
  switch (v) {
  case DomVariant::Plain:
    return "plain";
  case DomVariant::Connected:
    return "connected";
  case DomVariant::Independent:
    return "independent";
  case DomVariant::Clique:
    return "clique";
  }
  return "?";
}

DomVariant dom_variant_from_string(const std::string &s) {
  for (auto v : {DomVariant::Plain, DomVariant::Connected, DomVariant::Independent, DomVariant::Clique})
    if (s == to_string(v))
      return v;
  throw Error(ErrorKind::Parse, "unknown dominating set variant '" + s + "'");
}

namespace {

VertexSet to_set(std::size_t n, const std::vector<Vertex> &s) {
  VertexSet out(n);
  for (auto v : s) {
    if (v >= n)
      return VertexSet(0);
    out.set(v);
  }
  return out;
}

bool distinct_in_range(std::size_t n, const std::vector<Vertex> &s) {
  VertexSet seen(n);
  for (auto v : s) {
    if (v >= n || seen.test(v))
      return false;
    seen.set(v);
  }
  return true;
}

struct Exhausted {};

class Search {
public:
  Search(std::string problem, const SolveLimits &lim) : start_(std::chrono::steady_clock::now()) {
    report.problem = std::move(problem);
    report.limits = lim;
  }

  void tick() {
    ++report.nodes_explored;
    const auto &lim = report.limits;
    if (lim.max_nodes && report.nodes_explored > lim.max_nodes)
      throw Exhausted{};
    if (lim.max_seconds > 0 && (report.nodes_explored & 4095) == 0) {
      std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
      if (el.count() > lim.max_seconds)
        throw Exhausted{};
    }
  }

  template <typename F> SolveReport run(F &&body) {
    try {
      report.status = body() ? SolveStatus::Feasible : SolveStatus::Infeasible;
    } catch (const Exhausted &) {
      report.status = SolveStatus::Exhausted;
      report.witness.clear();
      report.side.clear();
      report.parts.clear();
    }
    std::sort(report.witness.begin(), report.witness.end());
    std::sort(report.side.begin(), report.side.end());
    return std::move(report);
  }

  SolveReport report;

private:
  std::chrono::steady_clock::time_point start_;
};

} // namespace

// ---------------------------------------------------------------------------

bool is_clique(const Graph &g, const std::vector<Vertex> &s) {
  if (!distinct_in_range(g.vertex_count(), s))
    return false;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!g.adjacent(s[a], s[b]))
        return false;
  return true;
}

bool is_independent(const Graph &g, const std::vector<Vertex> &s) {
  if (!distinct_in_range(g.vertex_count(), s))
    return false;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.adjacent(s[a], s[b]))
        return false;
  return true;
}

bool is_dominating_set(const Graph &g, const std::vector<Vertex> &s) {
  if (!distinct_in_range(g.vertex_count(), s))
    return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bool hit = false;
    for (auto x : s)
      hit = hit || x == v || g.adjacent(x, v);
    if (!hit)
      return false;
  }
  return true;
}

bool satisfies_variant(const Graph &g, const std::vector<Vertex> &s, DomVariant v) {
  switch (v) {
  case DomVariant::Plain:
    return true;
  case DomVariant::Connected:
    return !s.empty() && distinct_in_range(g.vertex_count(), s) && is_connected(g, to_set(g.vertex_count(), s));
  case DomVariant::Independent:
    return is_independent(g, s);
  case DomVariant::Clique:
    return is_clique(g, s);
  }
  return false;
}

bool is_perfect_code(const Graph &g, const std::vector<Vertex> &s) {
  if (!distinct_in_range(g.vertex_count(), s))
    return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::size_t hits = 0;
    for (auto x : s)
      hits += (x == v || g.adjacent(x, v)) ? 1 : 0;
    if (hits != 1)
      return false;
  }
  return true;
}

bool is_irredundant(const Graph &g, const std::vector<Vertex> &s) {
  if (!distinct_in_range(g.vertex_count(), s))
    return false;
  for (auto u : s) {
    bool has_private = false;
    for (Vertex w = 0; w < g.vertex_count() && !has_private; ++w) {
      if (w != u && !g.adjacent(u, w))
        continue;
      bool only_u = true;
      for (auto x : s)
        if (x != u && (x == w || g.adjacent(x, w)))
          only_u = false;
      has_private = only_u;
    }
    if (!has_private)
      return false;
  }
  return true;
}

bool is_clique_partition(const Graph &g, const std::vector<std::vector<Vertex>> &parts) {
  VertexSet seen(g.vertex_count());
  for (const auto &p : parts) {
    if (p.empty() || !is_clique(g, p))
      return false;
    for (auto v : p) {
      if (seen.test(v))
        return false;
      seen.set(v);
    }
  }
  return seen.count() == g.vertex_count();
}

bool is_multicolored_clique(const ColoredGraph &cg, const std::vector<Vertex> &s) {
  if (s.size() != cg.k || !is_clique(cg.graph, s))
    return false;
  std::vector<bool> used(cg.k + 1, false);
  for (auto v : s) {
    const auto c = static_cast<std::size_t>(cg.colors[v]);
    if (used[c])
      return false;
    used[c] = true;
  }
  return true;
}

bool is_rb_dominating(const RBInstance &rb, const std::vector<std::size_t> &reds) {
  std::vector<bool> used(rb.k + 1, false), red_in(rb.red_count(), false);
  if (reds.size() != rb.k)
    return false;
  for (auto r : reds) {
    if (r >= rb.red_count())
      return false;
    const auto c = static_cast<std::size_t>(rb.red_colors[r]);
    if (used[c])
      return false;
    used[c] = true;
    red_in[r] = true;
  }
  std::vector<bool> covered(rb.blue_count, false);
  for (auto [r, b] : rb.edges)
    if (red_in[r])
      covered[b] = true;
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

bool is_separation(const Graph &g, const std::vector<Vertex> &s, const std::vector<Vertex> &x, std::size_t l) {
  const std::size_t n = g.vertex_count();
  if (x.size() != l || !distinct_in_range(n, s) || !distinct_in_range(n, x))
    return false;
  VertexSet sx = to_set(n, s), xx = to_set(n, x);
  if (sx.intersects(xx))
    return false;
  for (auto u : x)
    for (Vertex w = 0; w < n; ++w)
      if (g.adjacent(u, w) && !sx.test(w) && !xx.test(w))
        return false;
  return true;
}

// ---------------------------------------------------------------------------

SolveReport solve_multicolored_clique(const ColoredGraph &cg, const SolveLimits &lim) {
  Search s("multicolored_clique", lim);
  std::vector<Vertex> chosen;
  auto rec = [&](auto &&self, int color) -> bool {
    s.tick();
    if (color > static_cast<int>(cg.k))
      return true;
    const auto &r = cg.vertices_of(color);
    for (auto v = r.begin; v < r.end; ++v) {
      bool ok = true;
      for (auto u : chosen)
        ok = ok && cg.graph.adjacent(u, v);
      if (!ok)
        continue;
      chosen.push_back(v);
      if (self(self, color + 1))
        return true;
      chosen.pop_back();
    }
    return false;
  };
  return s.run([&] {
    if (!rec(rec, 1))
      return false;
    s.report.witness = chosen;
    return true;
  });
}

SolveReport solve_clique(const Graph &g, std::size_t k, const SolveLimits &lim) {
  Search s("clique", lim);
  std::vector<Vertex> chosen;
  auto rec = [&](auto &&self, const VertexSet &cand) -> bool {
    s.tick();
    if (chosen.size() == k)
      return true;
    if (chosen.size() + cand.count() < k)
      return false;
    VertexSet rest = cand;
    for (auto v = cand.first(); v != VertexSet::npos; v = cand.next(v + 1)) {
      rest.reset(v);
      chosen.push_back(v);
      if (self(self, rest & g.open_neighborhood(v)))
        return true;
      chosen.pop_back();
    }
    return false;
  };
  return s.run([&] {
    if (!rec(rec, VertexSet::full(g.vertex_count())))
      return false;
    s.report.witness = chosen;
    return true;
  });
}

// ---------------------------------------------------------------------------

SolveReport solve_domset(const Graph &g, std::size_t k, DomVariant variant, bool exact_size, const SolveLimits &lim) {
  Search s(std::string("domset_") + to_string(variant), lim);
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> closed(n);
  for (Vertex v = 0; v < n; ++v)
    closed[v] = g.closed_neighborhood(v);
  std::vector<Vertex> chosen;
  VertexSet in(n);

  // Vertices that may join without breaking the variant constraint.
  auto allowed = [&]() {
    VertexSet out = VertexSet::full(n) - in;
    if (variant == DomVariant::Independent)
      for (auto x : chosen)
        out -= closed[x];
    if (variant == DomVariant::Clique)
      for (auto x : chosen)
        out &= g.open_neighborhood(x);
    return out;
  };
  auto connected_now = [&]() { return !chosen.empty() && is_connected(g, in); };
  auto frontier = [&]() {
    VertexSet out(n);
    for (auto x : chosen)
      out |= g.open_neighborhood(x);
    return out - in;
  };

  auto rec = [&](auto &&self, const VertexSet &dominated) -> bool {
    s.tick();
    auto push = [&](Vertex x) {
      chosen.push_back(x);
      in.set(x);
      if (self(self, dominated | closed[x]))
        return true;
      chosen.pop_back();
      in.reset(x);
      return false;
    };
    if (dominated.count() == n) {
      const bool shape_ok = variant != DomVariant::Connected || connected_now() || n == 0;
      if (shape_ok && (!exact_size || chosen.size() == k))
        return true;
      if (chosen.size() >= k)
        return false;
      VertexSet ext = variant == DomVariant::Connected ? (chosen.empty() ? VertexSet::full(n) : frontier()) : allowed();
      if (!shape_ok || variant != DomVariant::Plain) {
        for (auto x = ext.first(); x != VertexSet::npos; x = ext.next(x + 1))
          if (push(x))
            return true;
        return false;
      }
      // Plain sets pad freely.
      return ext.first() != VertexSet::npos && push(ext.first());
    }
    if (chosen.size() >= k)
      return false;
    const VertexSet cand = allowed();
    Vertex best = VertexSet::npos;
    std::size_t best_count = n + 1;
    for (Vertex w = 0; w < n; ++w) {
      if (dominated.test(w))
        continue;
      const std::size_t c = closed[w].intersection_count(cand);
      if (c < best_count) {
        best = w;
        best_count = c;
      }
    }
    if (best_count == 0)
      return false;
    const VertexSet opts = closed[best] & cand;
    for (auto x = opts.first(); x != VertexSet::npos; x = opts.next(x + 1))
      if (push(x))
        return true;
    return false;
  };
  return s.run([&] {
    if (!rec(rec, VertexSet(n)))
      return false;
    s.report.witness = chosen;
    return true;
  });
}

SolveReport solve_distance_domset(const Graph &g, std::size_t k, std::size_t d, const SolveLimits &lim) {
  if (d < 1)
    throw Error(ErrorKind::BadDistance, "distance must be at least 1");
  auto r = solve_domset(graph_power(g, d), k, DomVariant::Plain, false, lim);
  r.problem = "distance_domset";
  return r;
}

SolveReport solve_perfect_code(const Graph &g, std::size_t k, bool exact_size, const SolveLimits &lim) {
  Search s("perfect_code", lim);
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> closed(n);
  for (Vertex v = 0; v < n; ++v)
    closed[v] = g.closed_neighborhood(v);
  std::vector<Vertex> chosen;
  auto rec = [&](auto &&self, const VertexSet &covered) -> bool {
    s.tick();
    if (covered.count() == n)
      return !exact_size || chosen.size() == k;
    if (chosen.size() >= k)
      return false;
    Vertex best = VertexSet::npos;
    std::size_t best_count = n + 1;
    for (Vertex w = 0; w < n; ++w) {
      if (covered.test(w))
        continue;
      std::size_t c = 0;
      closed[w].for_each([&](Vertex x) { c += closed[x].intersects(covered) ? 0 : 1; });
      if (c < best_count) {
        best = w;
        best_count = c;
      }
    }
    if (best_count == 0)
      return false;
    for (auto x = closed[best].first(); x != VertexSet::npos; x = closed[best].next(x + 1)) {
      if (closed[x].intersects(covered))
        continue;
      chosen.push_back(x);
      if (self(self, covered | closed[x]))
        return true;
      chosen.pop_back();
    }
    return false;
  };
  return s.run([&] {
    if (!rec(rec, VertexSet(n)))
      return false;
    s.report.witness = chosen;
    return true;
  });
}

SolveReport solve_distance_perfect_code(const Graph &g, std::size_t k, std::size_t d, bool exact_size,
                                        const SolveLimits &lim) {
  if (d < 1)
    throw Error(ErrorKind::BadDistance, "distance must be at least 1");
  auto r = solve_perfect_code(graph_power(g, d), k, exact_size, lim);
  r.problem = "distance_perfect_code";
  return r;
}

SolveReport solve_rb_domset(const RBInstance &rb, const SolveLimits &lim) {
  Search s("rb_domset", lim);
  std::vector<std::vector<std::size_t>> by_color(rb.k + 1);
  for (std::size_t r = 0; r < rb.red_count(); ++r)
    by_color[static_cast<std::size_t>(rb.red_colors[r])].push_back(r);
  std::vector<VertexSet> reach(rb.red_count(), VertexSet(rb.blue_count));
  for (auto [r, b] : rb.edges)
    reach[r].set(b);
  std::vector<std::size_t> chosen;
  auto rec = [&](auto &&self, std::size_t color, const VertexSet &covered) -> bool {
    s.tick();
    if (color > rb.k)
      return covered.count() == rb.blue_count;
    for (auto r : by_color[color]) {
      chosen.push_back(r);
      if (self(self, color + 1, covered | reach[r]))
        return true;
      chosen.pop_back();
    }
    return false;
  };
  return s.run([&] {
    if (!rec(rec, 1, VertexSet(rb.blue_count)))
      return false;
    s.report.witness = chosen;
    return true;
  });
}

// ---------------------------------------------------------------------------

SolveReport solve_clique_partition(const Graph &g, std::size_t k, const SolveLimits &lim) {
  Search s("clique_partition", lim);
  const std::size_t n = g.vertex_count();
  struct Entry {
    std::size_t value;
    VertexSet pick; // empty when the set splits into components
  };
  std::unordered_map<VertexSet, Entry, VertexSetHash> memo;

  // Maximal cliques of g[u] through v, by Bron-Kerbosch with pivoting.
  auto maximal_cliques = [&](Vertex v, const VertexSet &u) {
    std::vector<VertexSet> out;
    VertexSet r(n);
    r.set(v);
    auto bk = [&](auto &&self, VertexSet &cur, VertexSet p, VertexSet x) -> void {
      s.tick();
      if (p.none() && x.none()) {
        out.push_back(cur);
        return;
      }
      Vertex pivot = VertexSet::npos;
      std::size_t best = 0;
      (p | x).for_each([&](Vertex w) {
        const std::size_t c = g.open_neighborhood(w).intersection_count(p);
        if (pivot == VertexSet::npos || c > best) {
          pivot = w;
          best = c;
        }
      });
      const VertexSet branch = p - g.open_neighborhood(pivot);
      branch.for_each([&](Vertex w) {
        cur.set(w);
        self(self, cur, p & g.open_neighborhood(w), x & g.open_neighborhood(w));
        cur.reset(w);
        p.reset(w);
        x.set(w);
      });
    };
    bk(bk, r, u & g.open_neighborhood(v), VertexSet(n));
    return out;
  };

  auto theta = [&](auto &&self, const VertexSet &u) -> std::size_t {
    s.tick();
    if (u.none())
      return 0;
    if (auto it = memo.find(u); it != memo.end())
      return it->second.value;
    auto comps = connected_components(g, u);
    if (comps.size() > 1) {
      std::size_t total = 0;
      for (const auto &c : comps)
        total += self(self, c);
      memo.emplace(u, Entry{total, VertexSet(0)});
      return total;
    }
    Vertex v = VertexSet::npos;
    std::size_t best_deg = n + 1;
    u.for_each([&](Vertex w) {
      const std::size_t dg = g.open_neighborhood(w).intersection_count(u);
      if (dg < best_deg) {
        v = w;
        best_deg = dg;
      }
    });
    Entry e{n + 1, VertexSet(n)};
    for (const auto &c : maximal_cliques(v, u)) {
      const std::size_t val = 1 + self(self, u - c);
      if (val < e.value) {
        e.value = val;
        e.pick = c;
      }
    }
    memo.emplace(u, e);
    return e.value;
  };

  auto rebuild = [&](auto &&self, const VertexSet &u) -> void {
    if (u.none())
      return;
    const Entry &e = memo.at(u);
    if (e.pick.size() == 0) {
      for (const auto &c : connected_components(g, u))
        self(self, c);
      return;
    }
    s.report.parts.push_back(e.pick.members());
    self(self, u - e.pick);
  };

  return s.run([&] {
    const VertexSet all = VertexSet::full(n);
    if (theta(theta, all) > k)
      return false;
    rebuild(rebuild, all);
    std::sort(s.report.parts.begin(), s.report.parts.end());
    return true;
  });
}

std::size_t clique_partition_number_bruteforce(const Graph &g) {
  const std::size_t n = g.vertex_count();
  if (n > 10)
    throw Error(ErrorKind::InvalidArgument, "set-partition enumeration is limited to 10 vertices");
  std::vector<std::vector<Vertex>> blocks;
  std::size_t best = n;
  auto rec = [&](auto &&self, Vertex v) -> void {
    if (blocks.size() >= best)
      return;
    if (v == n) {
      best = blocks.size();
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      bool ok = true;
      for (auto u : blocks[i])
        ok = ok && g.adjacent(u, v);
      if (!ok)
        continue;
      blocks[i].push_back(v);
      self(self, v + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({v});
    self(self, v + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  return best;
}

// ---------------------------------------------------------------------------

namespace {

// Calls visit(S) for every S with |S| <= k until visit returns true.
template <typename Visit> bool for_each_small_subset(std::size_t n, std::size_t k, Search &s, Visit &&visit) {
  std::vector<Vertex> cur;
  auto rec = [&](auto &&self, Vertex from) -> bool {
    s.tick();
    if (visit(cur))
      return true;
    if (cur.size() == k)
      return false;
    for (Vertex v = from; v < n; ++v) {
      cur.push_back(v);
      if (self(self, v + 1))
        return true;
      cur.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<VertexSet> components_without(const Graph &g, const std::vector<Vertex> &removed) {
  VertexSet alive = VertexSet::full(g.vertex_count());
  for (auto v : removed)
    alive.reset(v);
  return connected_components(g, alive);
}

} // namespace

SolveReport solve_separating(const Graph &g, std::size_t k, std::size_t l, const SolveLimits &lim) {
  Search s("separating", lim);
  return s.run([&] {
    return for_each_small_subset(g.vertex_count(), k, s, [&](const std::vector<Vertex> &del) {
      const auto comps = components_without(g, del);
      // Subset sum over component sizes with one predecessor per reachable sum.
      std::vector<int> from(l + 1, -2);
      from[0] = -1;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::size_t sz = comps[c].count();
        for (std::size_t t = l + 1; t-- > sz;)
          if (from[t] == -2 && from[t - sz] != -2)
            from[t] = static_cast<int>(c);
      }
      if (from[l] == -2)
        return false;
      s.report.witness = del;
      for (std::size_t t = l; t > 0;) {
        const auto &c = comps[static_cast<std::size_t>(from[t])];
        c.for_each([&](Vertex v) { s.report.side.push_back(v); });
        t -= c.count();
      }
      return true;
    });
  });
}

SolveReport solve_cut_connected(const Graph &g, std::size_t k, std::size_t l, const SolveLimits &lim) {
  Search s("cut_connected", lim);
  return s.run([&] {
    return for_each_small_subset(g.vertex_count(), k, s, [&](const std::vector<Vertex> &del) {
      for (const auto &c : components_without(g, del))
        if (c.count() == l) {
          s.report.witness = del;
          s.report.side = c.members();
          return true;
        }
      return false;
    });
  });
}

SolveReport solve_cut_components(const Graph &g, std::size_t k, std::size_t l, const SolveLimits &lim) {
  Search s("cut_components", lim);
  return s.run([&] {
    return for_each_small_subset(g.vertex_count(), k, s, [&](const std::vector<Vertex> &del) {
      if (components_without(g, del).size() < l)
        return false;
      s.report.witness = del;
      return true;
    });
  });
}

// ---------------------------------------------------------------------------

SolveReport solve_irredundant(const Graph &g, std::size_t k, bool exact_size, const SolveLimits &lim) {
  (void)exact_size;
  Search s("irredundant", lim);
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> closed(n);
  for (Vertex v = 0; v < n; ++v)
    closed[v] = g.closed_neighborhood(v);

  // Twin classes: any permutation inside one is an automorphism, so it is
  // enough to decide how many members of each class to take.
  std::vector<std::vector<Vertex>> classes;
  {
    std::map<std::vector<std::uint64_t>, std::vector<Vertex>> open_key, closed_key;
    for (Vertex v = 0; v < n; ++v)
      open_key[g.open_neighborhood(v).words()].push_back(v);
    std::vector<bool> placed(n, false);
    for (auto &[key, vs] : open_key)
      if (vs.size() > 1) {
        classes.push_back(vs);
        for (auto v : vs)
          placed[v] = true;
      }
    for (Vertex v = 0; v < n; ++v)
      if (!placed[v])
        closed_key[closed[v].words()].push_back(v);
    for (auto &[key, vs] : closed_key)
      classes.push_back(vs);
    std::sort(classes.begin(), classes.end());
  }
  std::vector<std::size_t> capacity(classes.size() + 1, 0);
  for (std::size_t c = classes.size(); c-- > 0;)
    capacity[c] = capacity[c + 1] + classes[c].size();

  std::vector<Vertex> chosen;
  std::vector<std::size_t> hits(n, 0); // |N[w] & chosen|

  auto add = [&](Vertex v) {
    chosen.push_back(v);
    closed[v].for_each([&](Vertex w) { ++hits[w]; });
  };
  auto drop = [&]() {
    Vertex v = chosen.back();
    chosen.pop_back();
    closed[v].for_each([&](Vertex w) { --hits[w]; });
  };
  auto irredundant_now = [&]() {
    for (auto u : chosen) {
      bool ok = false;
      closed[u].for_each([&](Vertex w) { ok = ok || hits[w] == 1; });
      if (!ok)
        return false;
    }
    return true;
  };

  auto rec = [&](auto &&self, std::size_t c) -> bool {
    s.tick();
    if (chosen.size() == k)
      return true;
    if (c == classes.size() || chosen.size() + capacity[c] < k)
      return false;
    const auto &cls = classes[c];
    std::size_t most = 0;
    while (most < cls.size() && chosen.size() < k) {
      add(cls[most]);
      if (!irredundant_now()) {
        drop();
        break;
      }
      ++most;
    }
    for (std::size_t take = most + 1; take-- > 0;) {
      if (self(self, c + 1))
        return true;
      if (take > 0)
        drop();
    }
    return false;
  };
  return s.run([&] {
    if (k > n || !rec(rec, 0))
      return false;
    s.report.witness = chosen;
    return true;
  });
}

} // namespace mig
