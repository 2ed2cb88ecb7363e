#include "mig/io.hpp"

#include "mig/errors.hpp"

#include <fstream>
#include <sstream>

namespace mig {

namespace {

const Json &field(const Json &j, const char *key, const std::string &where) {
  if (!j.is_object())
    throw Error(ErrorKind::Parse, where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw Error(ErrorKind::Parse, where + ": missing field '" + key + "'");
  return *it;
}

template <typename T> T get_as(const Json &j, const char *key, const std::string &where) {
  const Json &v = field(j, key, where);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::Parse, where + ": field '" + key + "' has the wrong type (" + e.what() + ")");
  }
}

void expect_type(const Json &j, const std::string &type) {
  const auto t = document_type(j);
  if (t != type)
    throw Error(ErrorKind::Parse, "expected a '" + type + "' document, got '" + t + "'");
}

// Edge endpoints are written 1-based.
Json edges_json(const std::vector<Edge> &edges) {
  Json out = Json::array();
  for (auto [u, v] : edges)
    out.push_back({u + 1, v + 1});
  return out;
}

std::vector<Edge> edges_from(const Json &j, const char *key, const std::string &where) {
  std::vector<Edge> out;
  const Json &arr = field(j, key, where);
  if (!arr.is_array())
    throw Error(ErrorKind::Parse, where + ": field '" + key + "' must be an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Json &e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned() ||
        e[0].get<std::size_t>() == 0 || e[1].get<std::size_t>() == 0)
      throw Error(ErrorKind::Parse, where + ": " + key + "[" + std::to_string(i) + "] must be a pair of 1-based indices");
    out.push_back({e[0].get<std::size_t>() - 1, e[1].get<std::size_t>() - 1});
  }
  return out;
}

Rational rational_from(const Json &j, const std::string &where) {
  if (j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::Parse, where + ": expected an integer or a rational string");
}

} // namespace

std::string document_type(const Json &j) { return get_as<std::string>(j, "type", "document"); }

Rational parse_rational(const std::string &s) {
  auto parse_int = [&](const std::string &t) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (t.empty() || used != t.size())
      throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
    return static_cast<std::int64_t>(v);
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos)
    return Rational(parse_int(s));
  const auto den = parse_int(s.substr(slash + 1));
  if (den == 0)
    throw Error(ErrorKind::Parse, "rational '" + s + "' has a zero denominator");
  return Rational(parse_int(s.substr(0, slash)), den);
}

// ---------------------------------------------------------------------------

Json to_json(const Graph &g) {
  Json j;
  j["type"] = "graph";
  j["n"] = g.vertex_count();
  j["labels"] = g.labels();
  j["edges"] = edges_json(g.edges());
  return j;
}

Graph graph_from_json(const Json &j) {
  expect_type(j, "graph");
  const auto n = get_as<std::size_t>(j, "n", "graph");
  std::vector<std::string> labels =
      j.contains("labels") ? get_as<std::vector<std::string>>(j, "labels", "graph") : default_labels(n);
  if (labels.size() != n)
    throw Error(ErrorKind::Parse, "graph: " + std::to_string(labels.size()) + " labels for " + std::to_string(n) +
                                      " vertices");
  Graph g(n, labels);
  for (auto [u, v] : edges_from(j, "edges", "graph")) {
    if (u >= n || v >= n || u == v)
      throw Error(ErrorKind::Parse, "graph: bad edge " + std::to_string(u) + "-" + std::to_string(v));
    g.add_edge(u, v);
  }
  return g;
}

Json to_json(const ColoredGraph &cg) {
  Json j;
  j["type"] = "colored";
  j["k"] = cg.k;
  j["n"] = cg.n();
  j["labels"] = cg.graph.labels();
  j["colors"] = cg.colors;
  j["edges"] = edges_json(cg.edge_list);
  return j;
}

ColoredGraph colored_from_json(const Json &j) {
  expect_type(j, "colored");
  const auto n = get_as<std::size_t>(j, "n", "colored");
  const auto k = get_as<std::size_t>(j, "k", "colored");
  auto colors = get_as<std::vector<int>>(j, "colors", "colored");
  std::vector<std::string> labels =
      j.contains("labels") ? get_as<std::vector<std::string>>(j, "labels", "colored") : default_labels(n);
  if (colors.size() != n || labels.size() != n)
    throw Error(ErrorKind::Parse, "colored: colors and labels must list all " + std::to_string(n) + " vertices");
  Graph g(n, labels);
  auto edges = edges_from(j, "edges", "colored");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v)
      throw Error(ErrorKind::Parse, "colored: bad edge " + std::to_string(u) + "-" + std::to_string(v));
    g.add_edge(u, v);
  }
  return canonicalize_colored(g, edges, colors, k);
}

Json to_json(const RBInstance &rb) {
  Json j;
  j["type"] = "rb";
  j["k"] = rb.k;
  j["red_colors"] = rb.red_colors;
  j["blue_count"] = rb.blue_count;
  j["edges"] = edges_json(rb.edges);
  j["red_labels"] = rb.red_labels;
  j["blue_labels"] = rb.blue_labels;
  return j;
}

RBInstance rb_from_json(const Json &j) {
  expect_type(j, "rb");
  auto rb = make_rb_instance(get_as<std::size_t>(j, "k", "rb"), get_as<std::vector<int>>(j, "red_colors", "rb"),
                             get_as<std::size_t>(j, "blue_count", "rb"), edges_from(j, "edges", "rb"));
  if (j.contains("red_labels")) {
    auto l = get_as<std::vector<std::string>>(j, "red_labels", "rb");
    if (l.size() != rb.red_count())
      throw Error(ErrorKind::Parse, "rb: red_labels has the wrong length");
    rb.red_labels = l;
  }
  if (j.contains("blue_labels")) {
    auto l = get_as<std::vector<std::string>>(j, "blue_labels", "rb");
    if (l.size() != rb.blue_count)
      throw Error(ErrorKind::Parse, "rb: blue_labels has the wrong length");
    rb.blue_labels = l;
  }
  return rb;
}

Json to_json(const IntervalFamily &f) {
  Json j;
  j["type"] = "family";
  j["kind"] = to_string(f.kind);
  j["t"] = f.t;
  j["unit"] = f.unit;
  j["balanced"] = f.balanced;
  j["unit_length"] = f.unit_length.str();
  Json members = Json::array();
  for (const auto &m : f.members) {
    Json parts = Json::array();
    for (const auto &p : m.parts)
      parts.push_back(Json{{"track", p.track}, {"lo", p.lo.str()}, {"hi", p.hi.str()}});
    members.push_back(Json{{"label", m.label}, {"parts", parts}});
  }
  j["members"] = members;
  return j;
}

IntervalFamily family_from_json(const Json &j) {
  expect_type(j, "family");
  IntervalFamily f;
  const auto kind = get_as<std::string>(j, "kind", "family");
  if (kind == to_string(FamilyKind::TInterval))
    f.kind = FamilyKind::TInterval;
  else if (kind == to_string(FamilyKind::TTrack))
    f.kind = FamilyKind::TTrack;
  else
    throw Error(ErrorKind::Parse, "family: unknown kind '" + kind + "'");
  f.t = get_as<int>(j, "t", "family");
  f.unit = j.contains("unit") && get_as<bool>(j, "unit", "family");
  f.balanced = j.contains("balanced") && get_as<bool>(j, "balanced", "family");
  if (j.contains("unit_length"))
    f.unit_length = rational_from(j["unit_length"], "family: unit_length");
  const Json &members = field(j, "members", "family");
  if (!members.is_array())
    throw Error(ErrorKind::Parse, "family: members must be an array");
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string where = "family member " + std::to_string(i);
    MultiInterval m;
    m.label = get_as<std::string>(members[i], "label", where);
    const std::string named = "member '" + m.label + "'";
    const Json &parts = field(members[i], "parts", named);
    if (!parts.is_array())
      throw Error(ErrorKind::Parse, named + ": parts must be an array");
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const std::string pw = named + " part " + std::to_string(p + 1);
      Interval iv;
      iv.track = get_as<int>(parts[p], "track", pw);
      try {
        iv.lo = rational_from(field(parts[p], "lo", pw), pw + " lo");
        iv.hi = rational_from(field(parts[p], "hi", pw), pw + " hi");
      } catch (const Error &e) {
        throw Error(ErrorKind::Parse, pw + ": " + e.what());
      }
      if (!(iv.lo < iv.hi))
        throw Error(ErrorKind::Parse, pw + ": hi " + iv.hi.str() + " is not above lo " + iv.lo.str());
      m.parts.push_back(iv);
    }
    f.members.push_back(std::move(m));
  }
  return f;
}

Json to_json(const ReductionBundle &b) {
  Json j;
  j["type"] = "bundle";
  j["name"] = b.name;
  j["problem"] = to_string(b.problem);
  j["complement"] = b.complement;
  Json params = Json::object();
  for (const auto &[k, v] : b.params)
    params[k] = v;
  j["params"] = params;
  if (b.family)
    j["family"] = to_json(*b.family);
  if (b.graph)
    j["graph"] = to_json(*b.graph);
  j["expected"] = to_json(b.expected);
  Json groups = Json::object();
  for (const auto &[k, v] : b.groups)
    groups[k] = v;
  j["groups"] = groups;
  j["source_digest"] = b.source_digest;
  return j;
}

ReductionBundle bundle_from_json(const Json &j) {
  expect_type(j, "bundle");
  ReductionBundle b;
  b.name = get_as<std::string>(j, "name", "bundle");
  b.problem = target_problem_from_string(get_as<std::string>(j, "problem", "bundle"));
  b.complement = get_as<bool>(j, "complement", "bundle");
  const Json &params = field(j, "params", "bundle");
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!it.value().is_number_integer())
      throw Error(ErrorKind::Parse, "bundle: parameter '" + it.key() + "' must be an integer");
    b.params[it.key()] = it.value().get<std::int64_t>();
  }
  if (j.contains("family"))
    b.family = family_from_json(j["family"]);
  if (j.contains("graph"))
    b.graph = graph_from_json(j["graph"]);
  b.expected = graph_from_json(field(j, "expected", "bundle"));
  if (j.contains("groups"))
    b.groups = get_as<std::map<std::string, std::vector<std::string>>>(j, "groups", "bundle");
  if (j.contains("source_digest"))
    b.source_digest = get_as<std::string>(j, "source_digest", "bundle");
  return b;
}

// ---------------------------------------------------------------------------

Json parse_json_text(const std::string &text, const std::string &origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::Parse,
                origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

} // namespace mig
