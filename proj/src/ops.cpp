#include "mig/ops.hpp"

#include "mig/errors.hpp"

#include <algorithm>

namespace mig {

Json generate_document(const GenRequest &req) {
  if (req.kind == "colored") {
    GenSpec spec;
    spec.n = req.n;
    spec.k = req.k;
    spec.edge_probability = req.p;
    spec.planted = req.planted;
    spec.seed = req.seed;
    return to_json(gen_colored_graph(spec));
  }
  if (req.kind == "rb")
    return to_json(gen_rb_instance(req.n, req.k, req.blues, req.p, req.planted, req.seed));
  throw Error(ErrorKind::InvalidArgument, "gen expects 'colored' or 'rb', got '" + req.kind + "'");
}

namespace {

ColoredGraph colored_source(const std::string &name, const Json &doc) {
  if (document_type(doc) != "colored")
    throw Error(ErrorKind::WrongBundleKind, name + " needs a colored graph, got a " + document_type(doc) + " document");
  return colored_from_json(doc);
}

std::size_t need_distance(const std::string &name, std::optional<std::size_t> d) {
  if (!d)
    throw Error(ErrorKind::BadDistance, name + " needs --d");
  return *d;
}

} // namespace

ReductionBundle reduce_by_name(const std::string &name, const Json &source, std::optional<std::size_t> d,
                               std::optional<std::size_t> k) {
  const std::string kind = reduction_source_kind(name);
  if (kind == "rb") {
    if (document_type(source) != "rb")
      throw Error(ErrorKind::WrongBundleKind, name + " needs a red/blue instance, got a " + document_type(source) +
                                                  " document");
    const RBInstance rb = rb_from_json(source);
    if (name == "dist_domset_unit2track")
      return reduce_dist_domset_unit2track(rb, need_distance(name, d));
    return reduce_dist_domset_co3interval(rb);
  }
  if (kind == "graph") {
    const std::string type = document_type(source);
    Graph g;
    std::optional<std::size_t> kk = k;
    if (type == "graph") {
      g = graph_from_json(source);
    } else if (type == "colored") {
      const ColoredGraph cg = colored_from_json(source);
      g = cg.graph;
      if (!kk)
        kk = cg.k;
    } else {
      throw Error(ErrorKind::WrongBundleKind, name + " needs a graph, got a " + type + " document");
    }
    if (!kk)
      throw Error(ErrorKind::InvalidArgument, name + " needs --k for a plain graph");
    return name == "sep_balanced2track" ? reduce_sep_balanced2track(g, *kk) : reduce_sep_cobal3track(g, *kk);
  }
  const ColoredGraph cg = colored_source(name, source);
  if (name == "domset_co3track")
    return reduce_domset_co3track(cg);
  if (name == "perfectcode_unit2track")
    return reduce_perfectcode_unit2track(cg);
  if (name == "dist_perfectcode_unit2track")
    return reduce_dist_perfectcode_unit2track(cg, need_distance(name, d));
  if (name == "cliquepartition_unit2interval")
    return reduce_cliquepartition_unit2interval(cg);
  return reduce_irredundant(cg);
}

const std::vector<std::string> &solve_problem_names() {
  static const std::vector<std::string> names{
      "domset",       "dist_domset",   "perfect_code",   "dist_perfect_code",   "clique_partition", "separating",
      "cut_connected", "cut_components", "irredundant", "clique", "multicolored_clique", "rb_domset"};
  return names;
}

Graph question_graph_of(const Json &doc, bool complement) {
  const std::string type = document_type(doc);
  Graph g;
  if (type == "graph")
    g = graph_from_json(doc);
  else if (type == "colored")
    g = colored_from_json(doc).graph;
  else if (type == "family")
    g = build_intersection_graph(family_from_json(doc));
  else if (type == "bundle")
    g = bundle_from_json(doc).question_graph();
  else
    throw Error(ErrorKind::WrongBundleKind, "cannot pose a graph question on a " + type + " document");
  return complement ? mig::complement(g) : g;
}

namespace {

Json labels_of(const Graph &g, const std::vector<Vertex> &vs) {
  Json out = Json::array();
  for (Vertex v : vs)
    out.push_back(g.label(v));
  return out;
}

Json report_json(const SolveRequest &req, const SolveReport &r) {
  Json j;
  j["type"] = "solve_report";
  j["problem"] = req.problem;
  j["k"] = req.k;
  if (req.l)
    j["l"] = *req.l;
  if (req.d)
    j["d"] = *req.d;
  j["status"] = to_string(r.status);
  j["feasible"] = r.feasible();
  j["nodes_explored"] = r.nodes_explored;
  return j;
}

std::size_t need_l(const SolveRequest &req) {
  if (!req.l)
    throw Error(ErrorKind::InvalidArgument, req.problem + " needs --l");
  return *req.l;
}

} // namespace

Json solve_document(const SolveRequest &req, const Json &doc) {
  const auto &names = solve_problem_names();
  if (std::find(names.begin(), names.end(), req.problem) == names.end())
    throw Error(ErrorKind::InvalidArgument, "unknown problem '" + req.problem + "'");

  if (req.problem == "rb_domset") {
    if (document_type(doc) != "rb")
      throw Error(ErrorKind::WrongBundleKind, "rb_domset needs a red/blue instance");
    const RBInstance rb = rb_from_json(doc);
    const SolveReport r = solve_rb_domset(rb, req.limits);
    Json j = report_json(req, r);
    Json w = Json::array();
    for (Vertex v : r.witness)
      w.push_back(rb.red_labels[v]);
    j["witness"] = w;
    return j;
  }
  if (req.problem == "multicolored_clique") {
    if (document_type(doc) != "colored")
      throw Error(ErrorKind::WrongBundleKind, "multicolored_clique needs a colored graph");
    const ColoredGraph cg = colored_from_json(doc);
    const SolveReport r = solve_multicolored_clique(cg, req.limits);
    Json j = report_json(req, r);
    j["witness"] = labels_of(cg.graph, r.witness);
    return j;
  }

  const Graph g = question_graph_of(doc, req.complement);
  SolveReport r;
  const std::string &p = req.problem;
  if (p == "domset") {
    r = solve_domset(g, req.k, req.variant, req.exact, req.limits);
  } else if (p == "dist_domset") {
    r = solve_distance_domset(g, req.k, need_distance(p, req.d), req.limits);
  } else if (p == "perfect_code") {
    r = solve_perfect_code(g, req.k, true, req.limits);
  } else if (p == "dist_perfect_code") {
    r = solve_distance_perfect_code(g, req.k, need_distance(p, req.d), true, req.limits);
  } else if (p == "clique_partition") {
    r = solve_clique_partition(g, req.k, req.limits);
  } else if (p == "separating") {
    r = solve_separating(g, req.k, need_l(req), req.limits);
  } else if (p == "cut_connected") {
    r = solve_cut_connected(g, req.k, need_l(req), req.limits);
  } else if (p == "cut_components") {
    r = solve_cut_components(g, req.k, need_l(req), req.limits);
  } else if (p == "irredundant") {
    r = solve_irredundant(g, req.k, true, req.limits);
  } else {
    r = solve_clique(g, req.k, req.limits);
  }
  Json j = report_json(req, r);
  if (p == "domset")
    j["variant"] = to_string(req.variant);
  j["vertex_count"] = g.vertex_count();
  j["witness"] = labels_of(g, r.witness);
  if (!r.side.empty())
    j["side"] = labels_of(g, r.side);
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const auto &part : r.parts)
      parts.push_back(labels_of(g, part));
    j["parts"] = parts;
  }
  return j;
}

std::string render_document(const Json &doc, RenderFormat format, int density) {
  const std::string type = document_type(doc);
  if (type == "family")
    return render_family(family_from_json(doc), format, density);
  if (type == "bundle") {
    const ReductionBundle b = bundle_from_json(doc);
    if (!b.family)
      throw Error(ErrorKind::WrongBundleKind, "bundle '" + b.name + "' carries a plain graph, not a family");
    return render_family(*b.family, format, density);
  }
  throw Error(ErrorKind::WrongBundleKind, "render needs a family or bundle document, got " + type);
}

} // namespace mig
