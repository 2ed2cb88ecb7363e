#include "mig/reductions.hpp"

#include "mig/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace mig {

const char *to_string(TargetProblem p) {
  switch (p) {
  case TargetProblem::DominatingSet:
    return "domset";
  case TargetProblem::DistanceDominatingSet:
    return "dist_domset";
  case TargetProblem::PerfectCode:
    return "perfect_code";
  case TargetProblem::DistancePerfectCode:
    return "dist_perfect_code";
  case TargetProblem::CliquePartition:
    return "clique_partition";
  case TargetProblem::SeparatingVertices:
    return "separating";
  case TargetProblem::Irredundant:
    return "irredundant";
  }
  return "?";
}

TargetProblem target_problem_from_string(const std::string &s) {
  for (auto p : {TargetProblem::DominatingSet, TargetProblem::DistanceDominatingSet, TargetProblem::PerfectCode,
                 TargetProblem::DistancePerfectCode, TargetProblem::CliquePartition,
                 TargetProblem::SeparatingVertices, TargetProblem::Irredundant})
    if (s == to_string(p))
      return p;
  throw Error(ErrorKind::Parse, "unknown target problem '" + s + "'");
}

std::int64_t ReductionBundle::param(const std::string &key) const {
  auto it = params.find(key);
  if (it == params.end())
    throw Error(ErrorKind::InvalidArgument, "bundle '" + name + "' has no parameter '" + key + "'");
  return it->second;
}

Graph ReductionBundle::realized() const {
  if (graph)
    return *graph;
  if (family)
    return build_intersection_graph_unchecked(*family);
  throw Error(ErrorKind::WrongBundleKind, "bundle has neither a family nor a graph");
}

Graph ReductionBundle::question_graph() const {
  Graph g = realized();
  return complement ? mig::complement(g) : g;
}

std::size_t ReductionBundle::member_count() const {
  if (graph)
    return graph->vertex_count();
  return family ? family->members.size() : 0;
}

std::string encode_source(const ColoredGraph &cg) {
  std::ostringstream os;
  os << "colored;k=" << cg.k << ";n=" << cg.n() << ";colors=";
  for (std::size_t v = 0; v < cg.n(); ++v)
    os << (v ? "," : "") << cg.colors[v];
  os << ";edges=";
  for (std::size_t r = 0; r < cg.m(); ++r)
    os << (r ? "," : "") << cg.edge_list[r].first + 1 << "-" << cg.edge_list[r].second + 1;
  return os.str();
}

std::string encode_source(const RBInstance &rb) {
  std::ostringstream os;
  os << "rb;k=" << rb.k << ";colors=";
  for (std::size_t v = 0; v < rb.red_count(); ++v)
    os << (v ? "," : "") << rb.red_colors[v];
  os << ";blues=" << rb.blue_count << ";edges=";
  for (std::size_t r = 0; r < rb.edges.size(); ++r)
    os << (r ? "," : "") << rb.edges[r].first + 1 << "-" << rb.edges[r].second + 1;
  return os.str();
}

std::string encode_source(const Graph &g, std::size_t k) {
  std::ostringstream os;
  os << "graph;k=" << k << ";n=" << g.vertex_count() << ";edges=";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ",") << u + 1 << "-" << v + 1;
    first = false;
  }
  return os.str();
}

std::string digest(const std::string &text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string lbl(const std::string &head, std::initializer_list<std::size_t> args) {
  std::string s = head + "(";
  bool first = true;
  for (auto a : args) {
    s += (first ? "" : ",") + std::to_string(a);
    first = false;
  }
  return s + ")";
}

std::string dum(const std::string &gadget, std::size_t idx) { return "DUM(" + gadget + "," + std::to_string(idx) + ")"; }
std::string color_gadget(int i) { return "C" + std::to_string(i); }
std::string pair_gadget(int i, int j) { return "P" + std::to_string(i) + "_" + std::to_string(j); }
std::string pair_group(int i, int j) { return "E_" + std::to_string(i) + "_" + std::to_string(j); }
std::string color_group(int i) { return "V_" + std::to_string(i); }

std::int64_t ck2(std::size_t k) { return static_cast<std::int64_t>(choose2(k)); }

Interval iv(int track, const Rational &lo, const Rational &hi) { return {track, lo, hi}; }

// Left-to-right window allocation per track, one unit of gap between windows.
class Cursor {
public:
  Rational take(int track, const Rational &width) {
    Rational &c = next_[track];
    Rational start = c;
    c = c + width + 1;
    return start;
  }

private:
  std::map<int, Rational> next_;
};

// Combinatorial description of a gadget layout. Members are lists of slots;
// the expected adjacency follows from slot rules alone, while the geometry
// maps every slot to concrete intervals.
enum class SlotKind { Unique, StairL, StairR, HugR, HugL, Path, Arc };

struct Slot {
  SlotKind kind = SlotKind::Unique;
  int group = 0;
  int branch = 0;
  int idx = 0;
  auto operator<=>(const Slot &) const = default;
};

class Model {
public:
  int staircase_group(SameRow variant) {
    variants_[next_group_] = variant;
    return next_group_++;
  }
  int path_group() { return next_group_++; }
  int arc_group(std::size_t n) {
    arc_n_[next_group_] = n;
    return next_group_++;
  }

  Slot unique() { return {SlotKind::Unique, next_group_++, 0, 0}; }
  Slot isolated(int track) {
    Slot s = unique();
    pending_.emplace_back(s, track);
    return s;
  }
  static Slot left(int g, std::size_t row) { return {SlotKind::StairL, g, 0, static_cast<int>(row)}; }
  static Slot right(int g, std::size_t row) { return {SlotKind::StairR, g, 0, static_cast<int>(row)}; }
  static Slot hug_right(int g) { return {SlotKind::HugR, g, 0, 0}; }
  static Slot hug_left(int g) { return {SlotKind::HugL, g, 0, 0}; }
  static Slot path(int g, int branch, std::size_t s) {
    return {SlotKind::Path, g, s == 0 ? 0 : branch, static_cast<int>(s)};
  }
  static Slot arc(int g, std::size_t pos) { return {SlotKind::Arc, g, 0, static_cast<int>(pos)}; }

  void place(const Slot &s, Interval i) { geometry_[s].push_back(std::move(i)); }

  void place_staircase(int g, const Staircase &st, bool with_right_hugger, bool with_left_hugger) {
    for (std::size_t r = 0; r < st.left.size(); ++r) {
      place(left(g, r), st.left[r]);
      place(right(g, r), st.right[r]);
    }
    if (with_right_hugger)
      place(hug_right(g), st.right_hugger());
    if (with_left_hugger)
      place(hug_left(g), st.left_hugger());
  }

  void add(std::string label, std::vector<Slot> slots) { members_.push_back({std::move(label), std::move(slots)}); }

  void place_isolated(Cursor &cursor, const Rational &length) {
    for (auto &[s, track] : pending_) {
      Rational a = cursor.take(track, length);
      place(s, iv(track, a, a + length));
    }
    pending_.clear();
  }

  bool meet(const Slot &a, const Slot &b) const {
    if (a == b)
      return true;
    if (a.group != b.group)
      return false;
    switch (a.kind) {
    case SlotKind::Unique:
      return false;
    case SlotKind::Path:
      if (b.kind != SlotKind::Path)
        return false;
      if (a.idx == 0 || b.idx == 0)
        return a.idx + b.idx == 1;
      return a.branch == b.branch && std::abs(a.idx - b.idx) == 1;
    case SlotKind::Arc: {
      const int n = static_cast<int>(arc_n_.at(a.group)), N = 4 * n + 1;
      const int diff = ((b.idx - a.idx) % N + N) % N;
      return diff != 2 * n && diff != 2 * n + 1;
    }
    default:
      break;
    }
    auto is = [](const Slot &s, SlotKind k) { return s.kind == k; };
    const Slot *l = nullptr, *r = nullptr;
    if (is(a, SlotKind::StairL) && is(b, SlotKind::StairR)) {
      l = &a;
      r = &b;
    } else if (is(b, SlotKind::StairL) && is(a, SlotKind::StairR)) {
      l = &b;
      r = &a;
    }
    if (l)
      return variants_.at(a.group) == SameRow::Include ? r->idx <= l->idx : r->idx < l->idx;
    if (a.kind == b.kind)
      return a.kind == SlotKind::StairL || a.kind == SlotKind::StairR;
    auto pair_is = [&](SlotKind x, SlotKind y) { return (is(a, x) && is(b, y)) || (is(a, y) && is(b, x)); };
    return pair_is(SlotKind::HugR, SlotKind::StairR) || pair_is(SlotKind::HugL, SlotKind::StairL);
  }

  Graph expected() const {
    std::vector<std::string> labels;
    for (const auto &m : members_)
      labels.push_back(m.first);
    Graph g(members_.size(), labels);
    for (std::size_t x = 0; x < members_.size(); ++x)
      for (std::size_t y = x + 1; y < members_.size(); ++y) {
        bool hit = false;
        for (const auto &s : members_[x].second)
          for (const auto &t : members_[y].second)
            hit = hit || meet(s, t);
        if (hit)
          g.add_edge(x, y);
      }
    return g;
  }

  IntervalFamily family(FamilyKind kind, int t, bool unit, bool balanced, const Rational &unit_length) const {
    IntervalFamily f;
    f.kind = kind;
    f.t = t;
    f.unit = unit;
    f.balanced = balanced;
    f.unit_length = unit_length;
    for (const auto &[label, slots] : members_) {
      MultiInterval mi{label, {}};
      for (const auto &s : slots) {
        auto it = geometry_.find(s);
        if (it == geometry_.end())
          throw Error(ErrorKind::InvalidArgument, "internal: slot without geometry in member " + label);
        for (const auto &part : it->second)
          mi.parts.push_back(part);
      }
      f.members.push_back(std::move(mi));
    }
    return f;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto &m : members_)
      out.push_back(m.first);
    return out;
  }

private:
  int next_group_ = 0;
  std::map<int, SameRow> variants_;
  std::map<int, std::size_t> arc_n_;
  std::map<Slot, std::vector<Interval>> geometry_;
  std::vector<std::pair<Slot, int>> pending_;
  std::vector<std::pair<std::string, std::vector<Slot>>> members_;
};

void require_nonempty_colors(const ColoredGraph &cg) {
  for (int i = 1; i <= static_cast<int>(cg.k); ++i)
    if (cg.vertices_of(i).empty())
      throw Error(ErrorKind::EmptyColorClass, "color class " + std::to_string(i) + " is empty");
}

void require_nonempty_pairs(const ColoredGraph &cg) {
  for (int i = 1; i <= static_cast<int>(cg.k); ++i)
    for (int j = i + 1; j <= static_cast<int>(cg.k); ++j)
      if (cg.edges_of(i, j).empty())
        throw Error(ErrorKind::EmptyColorClass,
                    "edge class " + std::to_string(i) + "," + std::to_string(j) + " is empty");
}

void add_dummy_group(ReductionBundle &b, const std::vector<std::string> &labels) {
  auto &grp = b.groups["dummies"];
  for (const auto &l : labels)
    if (l.rfind("DUM(", 0) == 0)
      grp.push_back(l);
}

std::vector<std::size_t> parse_label_args(const std::string &label) {
  std::vector<std::size_t> out;
  auto open = label.find('('), close = label.rfind(')');
  if (open == std::string::npos || close == std::string::npos)
    return out;
  std::stringstream ss(label.substr(open + 1, close - open - 1));
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(static_cast<std::size_t>(std::stoul(tok)));
  return out;
}

} // namespace

// ---------------------------------------------------------------------------

ReductionBundle reduce_domset_co3track(const ColoredGraph &cg) {
  const auto n = static_cast<std::int64_t>(cg.n()), m = static_cast<std::int64_t>(cg.m());
  const int k = static_cast<int>(cg.k);
  ReductionBundle b;
  b.name = "domset_co3track";
  b.problem = TargetProblem::DominatingSet;
  b.complement = true;

  IntervalFamily f;
  f.kind = FamilyKind::TTrack;
  f.t = 3;
  auto add = [&](std::string label, Interval t1, Interval t2, Interval t3) {
    f.members.push_back({std::move(label), {t1, t2, t3}});
  };
  for (std::int64_t p = 1; p <= n; ++p)
    add(lbl("V", {std::size_t(p)}), iv(1, p - 1, p), iv(2, p - 1 + m + 1, p + m + 1), iv(3, p - 1 + m + 1, p + m + 1));
  for (std::int64_t r = 1; r <= m; ++r)
    add(lbl("E", {std::size_t(r)}), iv(1, r - 1 + n + 1, r + n + 1), iv(2, r - 1, r), iv(3, r - 1, r));
  for (int i = 1; i <= k; ++i) {
    const auto &vr = cg.vertices_of(i);
    const auto s_i = static_cast<std::int64_t>(vr.begin + 1), t_i = static_cast<std::int64_t>(vr.end);
    add(lbl("COLOR", {std::size_t(i)}), iv(1, t_i, m + n + 1), iv(2, 0, s_i - 1 + m + 1), iv(3, m, m + 1));
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const auto &er = cg.edges_of(i, j);
      const auto s_ij = static_cast<std::int64_t>(er.begin + 1), t_ij = static_cast<std::int64_t>(er.end);
      add(lbl("PAIR", {std::size_t(i), std::size_t(j)}), iv(1, 0, s_ij - 1 + n + 1), iv(2, t_ij, n + m + 1),
          iv(3, m, m + 1));
    }
  for (std::int64_t r = 1; r <= m; ++r) {
    auto [pu, qu] = cg.edge_list[static_cast<std::size_t>(r - 1)];
    const auto &er = cg.edges_of(cg.colors[pu], cg.colors[qu]);
    const auto s_ij = static_cast<std::int64_t>(er.begin + 1), t_ij = static_cast<std::int64_t>(er.end);
    for (auto end : {pu, qu}) {
      const auto p = static_cast<std::int64_t>(end + 1);
      add(lbl("VAL", {std::size_t(p), std::size_t(r)}), iv(1, p, s_ij - 1 + n + 1), iv(2, t_ij, p - 1 + m + 1),
          iv(3, r - 1, r));
    }
  }

  // Declared adjacency: everything meets except the listed pairs.
  Graph ex(f.members.size(), f.labels());
  auto idx_v = [&](std::size_t p) { return p; };
  auto idx_e = [&](std::size_t r) { return cg.n() + r; };
  auto idx_color = [&](int i) { return cg.n() + cg.m() + static_cast<std::size_t>(i - 1); };
  auto idx_pair = [&](int i, int j) { return cg.n() + cg.m() + cg.k + cg.pair_index(i, j); };
  const std::size_t val0 = cg.n() + cg.m() + cg.k + choose2(cg.k);
  std::set<std::pair<std::size_t, std::size_t>> apart;
  auto sep = [&](std::size_t a, std::size_t c) { apart.insert({std::min(a, c), std::max(a, c)}); };
  const std::size_t ve = cg.n() + cg.m();
  for (std::size_t a = 0; a < ve; ++a)
    for (std::size_t c = a + 1; c < ve; ++c)
      sep(a, c);
  for (int i = 1; i <= k; ++i)
    for (auto p = cg.vertices_of(i).begin; p < cg.vertices_of(i).end; ++p)
      sep(idx_color(i), idx_v(p));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (auto r = cg.edges_of(i, j).begin; r < cg.edges_of(i, j).end; ++r)
        sep(idx_pair(i, j), idx_e(r));
  for (std::size_t r = 0; r < cg.m(); ++r) {
    auto [pu, qu] = cg.edge_list[r];
    const auto &er = cg.edges_of(cg.colors[pu], cg.colors[qu]);
    std::size_t w = 0;
    for (auto end : {pu, qu}) {
      const std::size_t me = val0 + 2 * r + w++;
      sep(me, idx_v(end));
      for (auto s = er.begin; s < er.end; ++s)
        if (s != r)
          sep(me, idx_e(s));
    }
  }
  for (std::size_t a = 0; a < ex.vertex_count(); ++a)
    for (std::size_t c = a + 1; c < ex.vertex_count(); ++c)
      if (!apart.count({a, c}))
        ex.add_edge(a, c);

  for (int i = 1; i <= k; ++i)
    for (auto p = cg.vertices_of(i).begin; p < cg.vertices_of(i).end; ++p)
      b.groups[color_group(i)].push_back(lbl("V", {p + 1}));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      auto &grp = b.groups[pair_group(i, j)];
      for (auto r = cg.edges_of(i, j).begin; r < cg.edges_of(i, j).end; ++r)
        grp.push_back(lbl("E", {r + 1}));
    }

  b.family = std::move(f);
  b.expected = std::move(ex);
  b.params = {{"k", k}, {"k_prime", k + ck2(cg.k)}, {"n", n}, {"m", m}};
  b.source_digest = digest(encode_source(cg));
  return b;
}

DomsetProperties check_domset_properties(const ReductionBundle &b) {
  if (b.name != "domset_co3track" || !b.family)
    throw Error(ErrorKind::WrongBundleKind, "property scan applies to domset_co3track bundles only");
  const Graph g = b.realized();
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    index[g.label(v)] = v;
  auto at = [&](const std::string &l) {
    auto it = index.find(l);
    if (it == index.end())
      throw Error(ErrorKind::LabelMismatch, "bundle lacks member " + l);
    return it->second;
  };
  // `who` meets every other member except exactly `except`.
  auto meets_all_but = [&](std::size_t who, const std::set<std::size_t> &except) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (v == who)
        continue;
      if (g.adjacent(who, v) == static_cast<bool>(except.count(v)))
        return false;
    }
    return true;
  };
  auto pairwise_disjoint = [&](const std::vector<std::string> &labels) {
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t c = a + 1; c < labels.size(); ++c)
        if (g.adjacent(at(labels[a]), at(labels[c])))
          return false;
    return true;
  };

  DomsetProperties out;
  out.holds.fill(true);
  const auto k = static_cast<std::size_t>(b.param("k"));
  std::map<std::size_t, std::string> pair_of_edge;
  for (std::size_t i = 1; i <= k; ++i) {
    const auto &grp = b.groups.count(color_group(int(i))) ? b.groups.at(color_group(int(i))) : std::vector<std::string>{};
    out.holds[0] = out.holds[0] && pairwise_disjoint(grp);
    std::set<std::size_t> own;
    for (const auto &l : grp)
      own.insert(at(l));
    out.holds[1] = out.holds[1] && meets_all_but(at(lbl("COLOR", {i})), own);
    for (std::size_t j = i + 1; j <= k; ++j) {
      const auto key = pair_group(int(i), int(j));
      const auto &eg = b.groups.count(key) ? b.groups.at(key) : std::vector<std::string>{};
      out.holds[2] = out.holds[2] && pairwise_disjoint(eg);
      std::set<std::size_t> owned;
      for (const auto &l : eg) {
        owned.insert(at(l));
        pair_of_edge[at(l)] = key;
      }
      out.holds[3] = out.holds[3] && meets_all_but(at(lbl("PAIR", {i, j})), owned);
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto &l = g.label(v);
    if (l.rfind("VAL(", 0) != 0)
      continue;
    auto args = parse_label_args(l);
    const std::size_t e = at(lbl("E", {args[1]}));
    std::set<std::size_t> except{at(lbl("V", {args[0]}))};
    auto it = pair_of_edge.find(e);
    if (it != pair_of_edge.end())
      for (const auto &other : b.groups.at(it->second))
        if (at(other) != e)
          except.insert(at(other));
    out.holds[4] = out.holds[4] && meets_all_but(v, except);
  }
  return out;
}

VariantFlags domset_variant_checks(const ReductionBundle &b, const std::vector<std::string> &witness) {
  const Graph q = b.question_graph();
  VertexSet s(q.vertex_count());
  for (const auto &l : witness) {
    auto v = q.find(l);
    if (v == q.vertex_count())
      throw Error(ErrorKind::InvalidArgument, "witness label " + l + " is not a member");
    s.set(v);
  }
  VariantFlags out;
  out.connected = is_connected(q, s);
  out.clique = true;
  out.independent = true;
  auto mem = s.members();
  for (std::size_t a = 0; a < mem.size(); ++a)
    for (std::size_t c = a + 1; c < mem.size(); ++c) {
      if (q.adjacent(mem[a], mem[c]))
        out.independent = false;
      else
        out.clique = false;
    }
  return out;
}

// ---------------------------------------------------------------------------

ReductionBundle reduce_dist_domset_unit2track(const RBInstance &rb_in, std::size_t d) {
  if (d < 2)
    throw Error(ErrorKind::BadDistance, "distance must be at least 2, got " + std::to_string(d));
  const RBInstance rb = canonicalize_rb(rb_in);
  std::vector<std::vector<std::size_t>> by_color(rb.k + 1);
  for (std::size_t s = 0; s < rb.red_count(); ++s)
    by_color[static_cast<std::size_t>(rb.red_colors[s])].push_back(s);
  for (std::size_t i = 1; i <= rb.k; ++i)
    if (by_color[i].empty())
      throw Error(ErrorKind::EmptyColorClass, "red color class " + std::to_string(i) + " is empty");

  Model M;
  Cursor C;
  const Rational half(1, 2);
  std::vector<Slot> u_slot(rb.red_count()), b_slot(rb.blue_count), b_hub(rb.blue_count);
  std::vector<int> color_path(rb.k + 1), blue_path(rb.blue_count);

  for (std::size_t i = 1; i <= rb.k; ++i) {
    const int g = M.path_group();
    color_path[i] = g;
    const auto len = static_cast<std::int64_t>(d);
    Rational a = C.take(1, Rational(len, 2) + 1);
    for (std::size_t s = 0; s <= d; ++s) {
      Rational lo = a + half * static_cast<std::int64_t>(s);
      M.place(Model::path(g, 0, s), iv(1, lo, lo + 1));
    }
    for (auto s : by_color[i]) {
      u_slot[s] = M.unique();
      Rational c = C.take(2, 1);
      M.place(u_slot[s], iv(2, c, c + 1));
    }
  }
  for (std::size_t t = 0; t < rb.blue_count; ++t) {
    b_slot[t] = M.unique();
    Rational c = C.take(1, 1);
    M.place(b_slot[t], iv(1, c, c + 1));
    const int g = M.path_group();
    blue_path[t] = g;
    b_hub[t] = Model::path(g, 0, 0);
    const auto len = static_cast<std::int64_t>(d - 2);
    Rational a = C.take(2, Rational(len, 2) + 1);
    for (std::size_t s = 0; s + 2 <= d; ++s) {
      Rational lo = a + half * static_cast<std::int64_t>(s);
      M.place(Model::path(g, 0, s), iv(2, lo, lo + 1));
    }
  }

  for (std::size_t s = 0; s < rb.red_count(); ++s)
    M.add(lbl("R", {s + 1}), {Model::path(color_path[static_cast<std::size_t>(rb.red_colors[s])], 0, 0), u_slot[s]});
  for (std::size_t t = 0; t < rb.blue_count; ++t)
    M.add(lbl("B", {t + 1}), {b_slot[t], b_hub[t]});
  for (std::size_t r = 0; r < rb.edges.size(); ++r)
    M.add(lbl("E", {r + 1}), {b_slot[rb.edges[r].second], u_slot[rb.edges[r].first]});
  for (std::size_t i = 1; i <= rb.k; ++i)
    for (std::size_t s = 1; s <= d; ++s)
      M.add(dum(color_gadget(int(i)), s), {Model::path(color_path[i], 0, s), M.isolated(2)});
  for (std::size_t t = 0; t < rb.blue_count; ++t)
    for (std::size_t s = 1; s + 2 <= d; ++s)
      M.add(dum("B" + std::to_string(t + 1), s), {Model::path(blue_path[t], 0, s), M.isolated(1)});
  M.place_isolated(C, 1);

  ReductionBundle b;
  b.name = "dist_domset_unit2track";
  b.problem = TargetProblem::DistanceDominatingSet;
  b.complement = false;
  b.family = M.family(FamilyKind::TTrack, 2, true, false, 1);
  b.expected = M.expected();
  for (std::size_t i = 1; i <= rb.k; ++i)
    for (auto s : by_color[i])
      b.groups[color_group(int(i))].push_back(lbl("R", {s + 1}));
  add_dummy_group(b, M.labels());
  b.params = {{"k", std::int64_t(rb.k)},
              {"k_prime", std::int64_t(rb.k)},
              {"d", std::int64_t(d)},
              {"n", std::int64_t(rb.red_count())},
              {"blues", std::int64_t(rb.blue_count)},
              {"m", std::int64_t(rb.edges.size())}};
  b.source_digest = digest(encode_source(rb));
  return b;
}

ReductionBundle reduce_dist_domset_co3interval(const RBInstance &rb_in) {
  const RBInstance rb = canonicalize_rb(rb_in);
  const auto R = static_cast<std::int64_t>(rb.red_count()), B = static_cast<std::int64_t>(rb.blue_count);
  const auto k = static_cast<std::int64_t>(rb.k);
  std::vector<std::int64_t> block_lo(rb.k + 2, -1), block_hi(rb.k + 2, -1);
  for (std::int64_t s = 0; s < R; ++s) {
    auto c = static_cast<std::size_t>(rb.red_colors[static_cast<std::size_t>(s)]);
    if (block_lo[c] < 0)
      block_lo[c] = s;
    block_hi[c] = s;
  }
  for (std::size_t i = 1; i <= rb.k; ++i)
    if (block_lo[i] < 0)
      throw Error(ErrorKind::EmptyColorClass, "red color class " + std::to_string(i) + " is empty");

  // Zones on one line: dummy cells, first cells of reds then blues, an edge
  // tail, and the second cells of the reds under one long blue interval.
  const std::int64_t zone_b = 2 * k + 2;
  const std::int64_t zone_b_end = zone_b + 2 * (R + B) + 1;
  const std::int64_t tail_lo = zone_b_end + 1, tail_hi = tail_lo + 1;
  const std::int64_t zone_d = tail_hi + 1, zone_d_end = zone_d + 2 * R + 1;
  auto cell_lo = [&](std::int64_t c) { return zone_b + 2 * c + 1; };
  auto x_cell = [&](std::int64_t p) { return iv(0, 2 * p - 1, 2 * p); };

  IntervalFamily f;
  f.kind = FamilyKind::TInterval;
  f.t = 3;
  for (std::int64_t s = 0; s < R; ++s)
    f.members.push_back({lbl("R", {std::size_t(s + 1)}),
                         {iv(0, cell_lo(s), cell_lo(s) + 1), iv(0, zone_d + 2 * s + 1, zone_d + 2 * s + 2)}});
  for (std::int64_t t = 0; t < B; ++t)
    f.members.push_back(
        {lbl("B", {std::size_t(t + 1)}), {iv(0, cell_lo(R + t), cell_lo(R + t) + 1), iv(0, zone_d, zone_d_end)}});
  for (std::size_t r = 0; r < rb.edges.size(); ++r) {
    const auto vs = static_cast<std::int64_t>(rb.edges[r].first), bt = R + static_cast<std::int64_t>(rb.edges[r].second);
    f.members.push_back({lbl("E", {r + 1}),
                         {iv(0, zone_b, cell_lo(vs)), iv(0, cell_lo(vs) + 1, cell_lo(bt)), iv(0, cell_lo(bt) + 1, tail_hi)}});
  }
  for (std::int64_t p = 1; p <= k; ++p)
    f.members.push_back({lbl("X", {std::size_t(p)}),
                         {iv(0, zone_b, cell_lo(block_lo[std::size_t(p)])),
                          iv(0, cell_lo(block_hi[std::size_t(p)]) + 1, zone_b_end), x_cell(p)}});
  for (std::int64_t q = 1; q <= k; ++q)
    f.members.push_back({lbl("Y", {std::size_t(q)}),
                         {iv(0, 0, 2 * q - 1), iv(0, 2 * q, 2 * k + 1), iv(0, tail_lo, zone_d_end)}});

  // The graph the question is asked on, before complementing back.
  const std::size_t nR = rb.red_count(), nB = rb.blue_count, nE = rb.edges.size();
  Graph h(f.members.size(), f.labels());
  auto e_at = [&](std::size_t r) { return nR + nB + r; };
  auto x_at = [&](std::size_t p) { return nR + nB + nE + p - 1; };
  auto y_at = [&](std::size_t q) { return nR + nB + nE + rb.k + q - 1; };
  for (std::size_t s = 0; s < nR; ++s)
    for (std::size_t s2 = s + 1; s2 < nR; ++s2)
      h.add_edge(s, s2);
  for (std::size_t r = 0; r < nE; ++r) {
    h.add_edge(rb.edges[r].first, e_at(r));
    h.add_edge(nR + rb.edges[r].second, e_at(r));
  }
  for (std::size_t s = 0; s < nR; ++s)
    h.add_edge(x_at(static_cast<std::size_t>(rb.red_colors[s])), s);
  for (std::size_t p = 1; p <= rb.k; ++p)
    h.add_edge(x_at(p), y_at(p));

  ReductionBundle b;
  b.name = "dist_domset_co3interval";
  b.problem = TargetProblem::DistanceDominatingSet;
  b.complement = true;
  b.family = std::move(f);
  b.expected = complement(h);
  for (std::size_t s = 0; s < nR; ++s)
    b.groups[color_group(rb.red_colors[s])].push_back(lbl("R", {s + 1}));
  b.params = {{"k", k}, {"k_prime", k}, {"d", 2}, {"n", R}, {"blues", B}, {"m", std::int64_t(nE)}};
  b.source_digest = digest(encode_source(rb));
  return b;
}

// ---------------------------------------------------------------------------

ReductionBundle reduce_perfectcode_unit2track(const ColoredGraph &cg) {
  require_nonempty_colors(cg);
  require_nonempty_pairs(cg);
  const int k = static_cast<int>(cg.k);
  Model M;
  Cursor C;
  std::vector<int> gv1(k + 1), gv2(k + 1);
  for (int i = 1; i <= k; ++i) {
    const auto phi = cg.vertices_of(i).size();
    gv1[i] = M.staircase_group(SameRow::Include);
    gv2[i] = M.staircase_group(SameRow::Include);
    M.place_staircase(gv1[i], staircase(phi, SameRow::Include, C.take(1, 3), 1), true, false);
    M.place_staircase(gv2[i], staircase(phi, SameRow::Include, C.take(2, 3), 2), true, false);
  }
  struct EdgeGadget {
    int gi1, gi2, gj1, gj2;
  };
  std::map<std::pair<int, int>, EdgeGadget> eg;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const auto pi = cg.vertices_of(i).size(), pj = cg.vertices_of(j).size();
      EdgeGadget e{M.staircase_group(SameRow::Exclude), M.staircase_group(SameRow::Exclude),
                   M.staircase_group(SameRow::Exclude), M.staircase_group(SameRow::Exclude)};
      M.place_staircase(e.gi1, staircase(pi, SameRow::Exclude, C.take(1, 3), 1), false, true);
      M.place_staircase(e.gi2, staircase(pi, SameRow::Exclude, C.take(2, 3), 2), false, true);
      M.place_staircase(e.gj1, staircase(pj, SameRow::Exclude, C.take(1, 3), 1), false, true);
      M.place_staircase(e.gj2, staircase(pj, SameRow::Exclude, C.take(2, 3), 2), false, true);
      eg[{i, j}] = e;
    }

  for (std::size_t p = 0; p < cg.n(); ++p) {
    const int i = cg.colors[p];
    M.add(lbl("V", {p + 1}), {Model::right(gv1[i], cg.row_of(p)), Model::right(gv2[i], cg.row_of(p))});
  }
  for (std::size_t r = 0; r < cg.m(); ++r) {
    auto [u, v] = cg.edge_list[r];
    const auto &e = eg.at({cg.colors[u], cg.colors[v]});
    const auto ru = cg.row_of(u), rv = cg.row_of(v);
    M.add(lbl("E1", {r + 1}), {Model::left(e.gi1, ru), Model::left(e.gj2, rv)});
    M.add(lbl("E2", {r + 1}), {Model::left(e.gj1, rv), Model::left(e.gi2, ru)});
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const auto &e = eg.at({i, j});
      const std::size_t ui = std::size_t(i), uj = std::size_t(j);
      for (auto p = cg.vertices_of(i).begin; p < cg.vertices_of(i).end; ++p) {
        const auto r = cg.row_of(p);
        M.add(lbl("VAL1", {p + 1, ui, uj}), {Model::left(gv1[i], r), Model::right(e.gi2, r)});
        M.add(lbl("VAL2", {p + 1, ui, uj}), {Model::right(e.gi1, r), Model::left(gv2[i], r)});
      }
      for (auto q = cg.vertices_of(j).begin; q < cg.vertices_of(j).end; ++q) {
        const auto r = cg.row_of(q);
        M.add(lbl("VAL1", {q + 1, ui, uj}), {Model::left(gv1[j], r), Model::right(e.gj2, r)});
        M.add(lbl("VAL2", {q + 1, ui, uj}), {Model::right(e.gj1, r), Model::left(gv2[j], r)});
      }
    }
  for (int i = 1; i <= k; ++i) {
    M.add(dum(color_gadget(i), 1), {Model::hug_right(gv1[i]), M.isolated(2)});
    M.add(dum(color_gadget(i), 2), {M.isolated(1), Model::hug_right(gv2[i])});
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const auto &e = eg.at({i, j});
      M.add(dum(pair_gadget(i, j), 1), {Model::hug_left(e.gi1), M.isolated(2)});
      M.add(dum(pair_gadget(i, j), 2), {M.isolated(1), Model::hug_left(e.gi2)});
      M.add(dum(pair_gadget(i, j), 3), {Model::hug_left(e.gj1), M.isolated(2)});
      M.add(dum(pair_gadget(i, j), 4), {M.isolated(1), Model::hug_left(e.gj2)});
    }
  M.place_isolated(C, 1);

  ReductionBundle b;
  b.name = "perfectcode_unit2track";
  b.problem = TargetProblem::PerfectCode;
  b.family = M.family(FamilyKind::TTrack, 2, true, false, 1);
  b.expected = M.expected();
  add_dummy_group(b, M.labels());
  b.params = {{"k", k}, {"k_prime", k + 2 * ck2(cg.k)}, {"n", std::int64_t(cg.n())}, {"m", std::int64_t(cg.m())}};
  b.source_digest = digest(encode_source(cg));
  return b;
}

ReductionBundle reduce_dist_perfectcode_unit2track(const ColoredGraph &cg, std::size_t d) {
  if (d < 2)
    throw Error(ErrorKind::BadDistance, "distance must be at least 2, got " + std::to_string(d));
  require_nonempty_colors(cg);
  const int k = static_cast<int>(cg.k);
  Model M;
  Cursor C;
  const Rational half(1, 2);
  const auto dd = static_cast<std::int64_t>(d);

  // Hub with two dummy branches of length d, one to each side.
  auto hub_gadget = [&](int track) {
    const int g = M.path_group();
    Rational a = C.take(track, dd + 1);
    Rational h = a + Rational(dd, 2);
    M.place(Model::path(g, 0, 0), iv(track, h, h + 1));
    for (std::size_t s = 1; s <= d; ++s) {
      Rational off = half * static_cast<std::int64_t>(s);
      M.place(Model::path(g, 0, s), iv(track, h - off, h - off + 1));
      M.place(Model::path(g, 1, s), iv(track, h + off, h + off + 1));
    }
    return g;
  };
  auto chain_slots = [&](int odd_track) {
    std::vector<Slot> out(d); // index 1..d-1
    for (std::size_t s = 1; s < d; ++s) {
      const int track = s % 2 == 1 ? odd_track : 3 - odd_track;
      out[s] = M.unique();
      Rational c = C.take(track, 1);
      M.place(out[s], iv(track, c, c + 1));
    }
    return out;
  };

  std::vector<int> vhub(k + 1);
  std::vector<std::vector<Slot>> uch(cg.n());
  for (int i = 1; i <= k; ++i) {
    vhub[i] = hub_gadget(1);
    for (auto p = cg.vertices_of(i).begin; p < cg.vertices_of(i).end; ++p)
      uch[p] = chain_slots(2);
  }
  std::map<std::pair<int, int>, int> ehub;
  std::vector<std::vector<Slot>> ech(cg.m());
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      ehub[{i, j}] = hub_gadget(2);
      for (auto r = cg.edges_of(i, j).begin; r < cg.edges_of(i, j).end; ++r)
        ech[r] = chain_slots(1);
    }
  // Validation staircases; for odd d the two tracks swap roles.
  const int t_ex = d % 2 == 0 ? 1 : 2, t_in = 3 - t_ex;
  struct Side {
    int ex, in;
  };
  std::map<std::tuple<int, int, int>, Side> side;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int c : {i, j}) {
        const auto phi = cg.vertices_of(c).size();
        Side s{M.staircase_group(SameRow::Exclude), M.staircase_group(SameRow::Include)};
        M.place_staircase(s.ex, staircase(phi, SameRow::Exclude, C.take(t_ex, 3), t_ex), false, false);
        M.place_staircase(s.in, staircase(phi, SameRow::Include, C.take(t_in, 3), t_in), false, false);
        side[{i, j, c}] = s;
      }

  for (std::size_t p = 0; p < cg.n(); ++p) {
    M.add(lbl("V", {p + 1}), {Model::path(vhub[cg.colors[p]], 0, 0), uch[p][1]});
    for (std::size_t s = 1; s + 1 < d; ++s)
      M.add(lbl("VCH", {p + 1, s}), {uch[p][s], uch[p][s + 1]});
  }
  for (std::size_t r = 0; r < cg.m(); ++r) {
    auto [u, v] = cg.edge_list[r];
    M.add(lbl("E", {r + 1}), {ech[r][1], Model::path(ehub.at({cg.colors[u], cg.colors[v]}), 0, 0)});
    for (std::size_t s = 1; s + 1 < d; ++s)
      M.add(lbl("ECH", {r + 1, s}), {ech[r][s], ech[r][s + 1]});
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int c : {i, j}) {
        const auto &s = side.at({i, j, c});
        for (auto p = cg.vertices_of(c).begin; p < cg.vertices_of(c).end; ++p) {
          const auto r = cg.row_of(p);
          M.add(lbl("VAL1", {p + 1, std::size_t(i), std::size_t(j)}), {uch[p][d - 1], Model::right(s.ex, r)});
          M.add(lbl("VAL2", {p + 1, std::size_t(i), std::size_t(j)}), {Model::left(s.ex, r), Model::right(s.in, r)});
        }
        for (auto r = cg.edges_of(i, j).begin; r < cg.edges_of(i, j).end; ++r) {
          const auto end = c == i ? cg.edge_list[r].first : cg.edge_list[r].second;
          M.add(lbl("VE", {end + 1, r + 1}), {ech[r][d - 1], Model::left(s.in, cg.row_of(end))});
        }
      }
  auto add_dummies = [&](const std::string &gadget, int g, int other_track) {
    for (int br = 0; br < 2; ++br)
      for (std::size_t s = 1; s <= d; ++s)
        M.add(dum(gadget, std::size_t(br) * d + s), {Model::path(g, br, s), M.isolated(other_track)});
  };
  for (int i = 1; i <= k; ++i)
    add_dummies(color_gadget(i), vhub[i], 2);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      add_dummies(pair_gadget(i, j), ehub.at({i, j}), 1);
  M.place_isolated(C, 1);

  ReductionBundle b;
  b.name = "dist_perfectcode_unit2track";
  b.problem = TargetProblem::DistancePerfectCode;
  b.family = M.family(FamilyKind::TTrack, 2, true, false, 1);
  b.expected = M.expected();
  add_dummy_group(b, M.labels());
  b.params = {{"k", k},
              {"k_prime", k + ck2(cg.k)},
              {"d", dd},
              {"n", std::int64_t(cg.n())},
              {"m", std::int64_t(cg.m())}};
  b.source_digest = digest(encode_source(cg));
  return b;
}

// ---------------------------------------------------------------------------

ReductionBundle reduce_cliquepartition_unit2interval(const ColoredGraph &cg) {
  require_nonempty_colors(cg);
  require_nonempty_pairs(cg);
  const int k = static_cast<int>(cg.k);
  Model M;
  Cursor C;

  // One complemented odd cycle per gadget, rescaled to unit length 1.
  auto cycle_gadget = [&](std::size_t n) {
    const int g = M.arc_group(n);
    const IntervalFamily raw = cycle_complement_unit2interval(n);
    Rational width = 0;
    for (const auto &mem : raw.members)
      for (const auto &p : mem.parts)
        width = max(width, p.hi);
    const Rational scale(1, static_cast<std::int64_t>(2 * n));
    const IntervalFamily placed = transformed(raw, scale, C.take(0, width * scale));
    const auto pos = cycle_complement_positions(n);
    for (std::size_t x = 0; x < placed.members.size(); ++x)
      for (const auto &p : placed.members[x].parts)
        M.place(Model::arc(g, pos[x]), p);
    return std::make_pair(g, pos);
  };

  std::vector<Slot> free_slot(cg.n());
  for (std::size_t p = 0; p < cg.n(); ++p)
    free_slot[p] = M.isolated(0);

  std::vector<std::pair<int, std::vector<std::size_t>>> color_cycles(k + 1);
  for (int i = 1; i <= k; ++i)
    color_cycles[i] = cycle_gadget(cg.vertices_of(i).size());
  std::map<std::pair<int, int>, std::pair<int, std::vector<std::size_t>>> pair_cycles;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      pair_cycles[{i, j}] = cycle_gadget(cg.edges_of(i, j).size());

  for (std::size_t p = 0; p < cg.n(); ++p) {
    const auto &[g, pos] = color_cycles[cg.colors[p]];
    M.add(lbl("V", {p + 1}), {Model::arc(g, pos[cg.row_of(p)]), free_slot[p]});
  }
  for (std::size_t r = 0; r < cg.m(); ++r) {
    auto [u, v] = cg.edge_list[r];
    const auto &[g, pos] = pair_cycles.at({cg.colors[u], cg.colors[v]});
    const auto slot = Model::arc(g, pos[r - cg.edges_of(cg.colors[u], cg.colors[v]).begin]);
    M.add(lbl("UE", {u + 1, r + 1}), {slot, free_slot[u]});
    M.add(lbl("UE", {v + 1, r + 1}), {slot, free_slot[v]});
  }
  for (int i = 1; i <= k; ++i) {
    const auto &[g, pos] = color_cycles[i];
    const std::size_t ni = cg.vertices_of(i).size();
    for (std::size_t j = 0; j < 3 * ni + 1; ++j)
      M.add(dum(color_gadget(i), j + 1), {Model::arc(g, pos[ni + j])});
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const auto &[g, pos] = pair_cycles.at({i, j});
      const std::size_t mij = cg.edges_of(i, j).size();
      for (std::size_t x = 0; x < 3 * mij + 1; ++x)
        M.add(dum(pair_gadget(i, j), x + 1), {Model::arc(g, pos[mij + x])});
    }
  M.place_isolated(C, 1);

  ReductionBundle b;
  b.name = "cliquepartition_unit2interval";
  b.problem = TargetProblem::CliquePartition;
  b.family = M.family(FamilyKind::TInterval, 2, true, false, 1);
  b.expected = M.expected();
  add_dummy_group(b, M.labels());
  b.params = {{"k", k}, {"k_prime", 3 * k + 2 * ck2(cg.k)}, {"n", std::int64_t(cg.n())}, {"m", std::int64_t(cg.m())}};
  b.source_digest = digest(encode_source(cg));
  return b;
}

// ---------------------------------------------------------------------------

ReductionBundle reduce_sep_balanced2track(const Graph &g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (n <= k + 2 * choose2(k))
    throw Error(ErrorKind::TooFewVertices, "need n > k + 2*C(k,2) = " + std::to_string(k + 2 * choose2(k)) +
                                               ", got n = " + std::to_string(n));
  const auto edges = g.edges();
  const auto N = static_cast<std::int64_t>(n);
  IntervalFamily f;
  f.kind = FamilyKind::TTrack;
  f.t = 2;
  f.balanced = true;
  auto base = [&](std::size_t p) { return static_cast<std::int64_t>(p) * (N + 1); };
  for (std::size_t p = 0; p < n; ++p)
    f.members.push_back({lbl("V", {p + 1}), {iv(1, 0, N), iv(2, base(p), base(p) + N)}});
  std::vector<std::int64_t> used(n, 0);
  for (std::size_t r = 0; r < edges.size(); ++r) {
    const auto slot = N + 2 * static_cast<std::int64_t>(r) + 1;
    for (auto end : {edges[r].first, edges[r].second}) {
      const auto lo = base(end) + used[end]++;
      f.members.push_back({lbl("EV", {r + 1, end + 1}), {iv(1, slot, slot + 1), iv(2, lo, lo + 1)}});
    }
  }

  Graph ex(f.members.size(), f.labels());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      ex.add_edge(p, q);
  for (std::size_t r = 0; r < edges.size(); ++r) {
    const std::size_t a = n + 2 * r, c = a + 1;
    ex.add_edge(a, c);
    ex.add_edge(a, edges[r].first);
    ex.add_edge(c, edges[r].second);
  }

  ReductionBundle b;
  b.name = "sep_balanced2track";
  b.problem = TargetProblem::SeparatingVertices;
  b.family = std::move(f);
  b.expected = std::move(ex);
  const auto kk = static_cast<std::int64_t>(k);
  b.params = {{"k", kk},
              {"k_prime", kk},
              {"l_prime", 2 * ck2(k)},
              {"n", N},
              {"m", static_cast<std::int64_t>(edges.size())}};
  b.source_digest = digest(encode_source(g, k));
  return b;
}

ReductionBundle reduce_sep_cobal3track(const Graph &g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (n <= k + choose2(k))
    throw Error(ErrorKind::TooFewVertices,
                "need n > k + C(k,2) = " + std::to_string(k + choose2(k)) + ", got n = " + std::to_string(n));
  const auto edges = g.edges();
  const auto N = static_cast<std::int64_t>(n);
  IntervalFamily f;
  f.kind = FamilyKind::TTrack;
  f.t = 3;
  f.balanced = true;
  auto gap_lo = [&](std::int64_t i) { return (i - 1) * (N + 1); }; // 1-based
  for (std::int64_t p = 1; p <= N; ++p)
    f.members.push_back(
        {lbl("V", {std::size_t(p)}), {iv(1, p - 1, p), iv(2, gap_lo(p), gap_lo(p) + 1), iv(3, p - 1, p)}});
  for (std::size_t r = 0; r < edges.size(); ++r) {
    const auto i = static_cast<std::int64_t>(edges[r].first + 1), j = static_cast<std::int64_t>(edges[r].second + 1);
    const std::int64_t len = (j - i) * (N + 1) - 1;
    f.members.push_back({lbl("E", {r + 1}),
                         {iv(1, i - 1 - len, i - 1), iv(2, gap_lo(i) + 1, gap_lo(j)), iv(3, j, j + len)}});
  }

  Graph ex(f.members.size(), f.labels());
  for (std::size_t r = 0; r < edges.size(); ++r) {
    for (std::size_t s = r + 1; s < edges.size(); ++s)
      ex.add_edge(n + r, n + s);
    for (std::size_t l = 0; l < n; ++l)
      if (l != edges[r].first && l != edges[r].second)
        ex.add_edge(n + r, l);
  }

  ReductionBundle b;
  b.name = "sep_cobal3track";
  b.problem = TargetProblem::SeparatingVertices;
  b.complement = true;
  b.family = std::move(f);
  b.expected = std::move(ex);
  const auto kk = static_cast<std::int64_t>(k);
  b.params = {{"k", kk}, {"k_prime", kk}, {"l_prime", ck2(k)}, {"n", N}, {"m", static_cast<std::int64_t>(edges.size())}};
  b.source_digest = digest(encode_source(g, k));
  return b;
}

CutParams derive_cutting_params(const ReductionBundle &b, CutVariant variant) {
  if (b.name != "sep_balanced2track" && b.name != "sep_cobal3track")
    throw Error(ErrorKind::WrongBundleKind, "cutting parameters need a separating-vertices bundle, got '" + b.name + "'");
  const std::int64_t k = b.param("k"), n = b.param("n"), m = b.param("m");
  const std::int64_t c2 = k * (k - 1) / 2;
  CutParams out;
  out.k = k;
  if (variant == CutVariant::Components)
    out.l = c2 + 1;
  else if (b.name == "sep_balanced2track")
    out.l = n + 2 * m - 2 * c2 - k;
  else
    out.l = n + m - c2 - k;
  return out;
}

// ---------------------------------------------------------------------------

ReductionBundle reduce_irredundant(const ColoredGraph &cg) {
  const std::size_t n = cg.n(), m = cg.m();
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t a = 1; a <= 3; ++a)
      labels.push_back(lbl("V", {p + 1, a}));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 1; c <= 5; ++c)
      labels.push_back(lbl("E", {r + 1, c}));
  Graph g(labels.size(), labels);
  auto vtx = [](std::size_t p, std::size_t a) { return 3 * p + a; };
  auto edg = [&](std::size_t r, std::size_t c) { return 3 * n + 5 * r + c; };

  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t c = a + 1; c < 3; ++c)
        g.add_edge(vtx(p, a), vtx(p, c));
    for (std::size_t q = p + 1; q < n; ++q)
      if (cg.colors[p] != cg.colors[q])
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t c = 0; c < 3; ++c)
            g.add_edge(vtx(p, a), vtx(q, c));
  }
  for (std::size_t r = 0; r < m; ++r) {
    auto [u, v] = cg.edge_list[r];
    const int ci = cg.colors[u], cj = cg.colors[v];
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t c = a + 1; c < 5; ++c)
        g.add_edge(edg(r, a), edg(r, c));
    for (std::size_t p = 0; p < n; ++p) {
      const bool joined = (cg.colors[p] != ci && cg.colors[p] != cj) || p == u || p == v;
      if (joined)
        for (std::size_t a = 0; a < 5; ++a)
          for (std::size_t c = 0; c < 3; ++c)
            g.add_edge(edg(r, a), vtx(p, c));
    }
    for (std::size_t s = r + 1; s < m; ++s) {
      auto [x, y] = cg.edge_list[s];
      if (cg.colors[x] == ci && cg.colors[y] == cj)
        continue;
      for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t c = 0; c < 5; ++c)
          g.add_edge(edg(r, a), edg(s, c));
    }
  }

  ReductionBundle b;
  b.name = "irredundant";
  b.problem = TargetProblem::Irredundant;
  b.complement = true;
  b.graph = g;
  b.expected = std::move(g);
  const auto k = static_cast<std::int64_t>(cg.k);
  b.params = {{"k", k}, {"k_prime", 3 * k + 5 * ck2(cg.k)}, {"n", std::int64_t(n)}, {"m", std::int64_t(m)}};
  b.source_digest = digest(encode_source(cg));
  return b;
}

const std::vector<std::string> &reduction_names() {
  static const std::vector<std::string> names{"domset_co3track",
                                              "dist_domset_unit2track",
                                              "dist_domset_co3interval",
                                              "perfectcode_unit2track",
                                              "dist_perfectcode_unit2track",
                                              "cliquepartition_unit2interval",
                                              "sep_balanced2track",
                                              "sep_cobal3track",
                                              "irredundant"};
  return names;
}

std::string reduction_source_kind(const std::string &name) {
  if (name == "dist_domset_unit2track" || name == "dist_domset_co3interval")
    return "rb";
  if (name == "sep_balanced2track" || name == "sep_cobal3track")
    return "graph";
  for (const auto &n : reduction_names())
    if (n == name)
      return "colored";
  throw Error(ErrorKind::InvalidArgument, "unknown reduction '" + name + "'");
}

} // namespace mig
