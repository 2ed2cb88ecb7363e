#include "mig/verify.hpp"

#include "mig/errors.hpp"
#include "mig/generators.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace mig {

bool TrialRecord::passed() const {
  if (!agree || !error.empty())
    return false;
  return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.second; });
}

bool VerifyReport::pass() const {
  return !trials.empty() && std::all_of(trials.begin(), trials.end(), [](const auto &t) { return t.passed(); });
}

std::size_t VerifyReport::agreeing() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto &t) { return t.agree; }));
}

std::size_t VerifyReport::exhausted() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto &t) {
    return t.source_status == "exhausted" || t.target_status == "exhausted";
  }));
}

std::size_t VerifyReport::failed_checks() const {
  std::size_t c = 0;
  for (const auto &t : trials)
    for (const auto &[k, v] : t.checks)
      c += v ? 0 : 1;
  return c;
}

const std::vector<std::string> &verify_names() {
  static const std::vector<std::string> names = [] {
    auto v = reduction_names();
    for (const char *cut : {"cut_connected_balanced2track", "cut_connected_cobal3track", "cut_components_balanced2track",
                            "cut_components_cobal3track"})
      v.push_back(cut);
    return v;
  }();
  return names;
}

// ---------------------------------------------------------------------------

namespace {

ColoredGraph make_colored(std::size_t n, const std::vector<Edge> &edges, const std::vector<int> &colors,
                          std::size_t k) {
  Graph g(n, default_labels(n));
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return canonicalize_colored(g, edges, colors, k);
}

const std::vector<Edge> &sample_colored_edges() {
  static const std::vector<Edge> e{{0, 2}, {0, 3}, {1, 3}, {2, 3}};
  return e;
}

} // namespace

ColoredGraph sample_colored_instance() { return make_colored(4, sample_colored_edges(), {1, 1, 2, 3}, 3); }

ColoredGraph sample_colored_without(std::size_t r) {
  if (r < 1 || r > sample_colored_edges().size())
    throw Error(ErrorKind::InvalidArgument, "the sample instance has edges e1..e4");
  auto edges = sample_colored_edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(r - 1));
  return make_colored(4, edges, {1, 1, 2, 3}, 3);
}

const std::vector<std::string> &sample_witness_labels() {
  static const std::vector<std::string> w{"V(1)", "V(3)", "V(4)", "E(1)", "E(2)", "E(4)"};
  return w;
}

RBInstance sample_rb_instance() { return make_rb_instance(2, {1, 1, 2}, 3, {{0, 0}, {0, 1}, {1, 0}, {2, 0}, {2, 2}}); }

// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

struct Source {
  std::string kind; // colored, rb, graph
  ColoredGraph cg;
  RBInstance rb;
  Graph g;
  std::size_t k = 0;
  std::size_t d = 2;
};

struct Plan {
  std::string builder;
  std::optional<CutVariant> cut;
};

Plan plan_for(const std::string &name) {
  if (name.rfind("cut_", 0) == 0) {
    const bool conn = name.rfind("cut_connected_", 0) == 0;
    const std::string rest = name.substr(conn ? 14 : 15);
    return {"sep_" + rest, conn ? CutVariant::Connected : CutVariant::Components};
  }
  return {name, std::nullopt};
}

bool is_distance_builder(const std::string &b) {
  return b == "dist_domset_unit2track" || b == "dist_perfectcode_unit2track";
}

ReductionBundle build(const std::string &builder, const Source &s) {
  if (builder == "domset_co3track")
    return reduce_domset_co3track(s.cg);
  if (builder == "dist_domset_unit2track")
    return reduce_dist_domset_unit2track(s.rb, s.d);
  if (builder == "dist_domset_co3interval")
    return reduce_dist_domset_co3interval(s.rb);
  if (builder == "perfectcode_unit2track")
    return reduce_perfectcode_unit2track(s.cg);
  if (builder == "dist_perfectcode_unit2track")
    return reduce_dist_perfectcode_unit2track(s.cg, s.d);
  if (builder == "cliquepartition_unit2interval")
    return reduce_cliquepartition_unit2interval(s.cg);
  if (builder == "sep_balanced2track")
    return reduce_sep_balanced2track(s.g, s.k);
  if (builder == "sep_cobal3track")
    return reduce_sep_cobal3track(s.g, s.k);
  if (builder == "irredundant")
    return reduce_irredundant(s.cg);
  throw Error(ErrorKind::InvalidArgument, "unknown reduction '" + builder + "'");
}

SolveReport solve_source(const Source &s, const SolveLimits &lim) {
  if (s.kind == "colored")
    return solve_multicolored_clique(s.cg, lim);
  if (s.kind == "rb")
    return solve_rb_domset(s.rb, lim);
  return solve_clique(s.g, s.k, lim);
}

SolveReport solve_target(const ReductionBundle &b, const Plan &plan, const SolveLimits &lim) {
  const Graph q = b.question_graph();
  const auto kp = static_cast<std::size_t>(b.param("k_prime"));
  if (plan.cut) {
    const auto cp = derive_cutting_params(b, *plan.cut);
    const auto ck = static_cast<std::size_t>(cp.k);
    const auto cl = static_cast<std::size_t>(std::max<std::int64_t>(cp.l, 0));
    return *plan.cut == CutVariant::Connected ? solve_cut_connected(q, ck, cl, lim) : solve_cut_components(q, ck, cl, lim);
  }
  switch (b.problem) {
  case TargetProblem::DominatingSet:
    return solve_domset(q, kp, DomVariant::Plain, false, lim);
  case TargetProblem::DistanceDominatingSet:
    return solve_distance_domset(q, kp, static_cast<std::size_t>(b.param("d")), lim);
  case TargetProblem::PerfectCode:
    return solve_perfect_code(q, kp, true, lim);
  case TargetProblem::DistancePerfectCode:
    return solve_distance_perfect_code(q, kp, static_cast<std::size_t>(b.param("d")), true, lim);
  case TargetProblem::CliquePartition:
    return solve_clique_partition(q, kp, lim);
  case TargetProblem::SeparatingVertices:
    return solve_separating(q, kp, static_cast<std::size_t>(b.param("l_prime")), lim);
  case TargetProblem::Irredundant:
    return solve_irredundant(q, kp, true, lim);
  }
  throw Error(ErrorKind::InvalidArgument, "unsupported target problem");
}

std::int64_t c2(std::int64_t k) { return k * (k - 1) / 2; }

// Closed-form member count of each construction.
std::int64_t expected_members(const std::string &builder, const ReductionBundle &b) {
  const std::int64_t k = b.param("k"), n = b.param("n"), m = b.param("m");
  if (builder == "domset_co3track")
    return n + m + k + c2(k) + 2 * m;
  if (builder == "dist_domset_unit2track") {
    const std::int64_t d = b.param("d"), blues = b.param("blues");
    return n + blues + m + k * d + blues * (d - 2);
  }
  if (builder == "dist_domset_co3interval")
    return n + b.param("blues") + m + 2 * k;
  if (builder == "perfectcode_unit2track")
    return n + 2 * m + 2 * (k - 1) * n + 2 * k + 4 * c2(k);
  if (builder == "dist_perfectcode_unit2track") {
    const std::int64_t d = b.param("d");
    return (n + m) * (d - 1) + 2 * (k - 1) * n + 2 * m + 2 * d * (k + c2(k));
  }
  if (builder == "cliquepartition_unit2interval")
    return n + 2 * m + (3 * n + 3 * m + k + c2(k));
  if (builder == "sep_balanced2track")
    return n + 2 * m;
  if (builder == "sep_cobal3track")
    return n + m;
  if (builder == "irredundant")
    return 3 * n + 5 * m;
  return -1;
}

std::optional<std::int64_t> expected_dummies(const std::string &builder, const ReductionBundle &b) {
  const std::int64_t k = b.param("k");
  if (builder == "perfectcode_unit2track")
    return 2 * k + 4 * c2(k);
  if (builder == "dist_perfectcode_unit2track")
    return 2 * b.param("d") * (k + c2(k));
  if (builder == "dist_domset_unit2track")
    return k * b.param("d") + b.param("blues") * (b.param("d") - 2);
  return std::nullopt;
}

bool class_conforms(const std::string &builder, const IntervalFamily &f) {
  if (!validate_family(f).ok())
    return false;
  auto is = [&](FamilyKind kind, int t) { return f.kind == kind && f.t == t; };
  if (builder == "domset_co3track")
    return is(FamilyKind::TTrack, 3);
  if (builder == "dist_domset_co3interval")
    return is(FamilyKind::TInterval, 3);
  if (builder == "cliquepartition_unit2interval")
    return is(FamilyKind::TInterval, 2) && f.unit;
  if (builder == "sep_balanced2track")
    return is(FamilyKind::TTrack, 2) && f.balanced;
  if (builder == "sep_cobal3track")
    return is(FamilyKind::TTrack, 3) && f.balanced;
  return is(FamilyKind::TTrack, 2) && f.unit;
}

void structural_checks(const std::string &builder, const ReductionBundle &b, TrialRecord &t) {
  const auto members = static_cast<std::int64_t>(b.member_count());
  t.counts["members"] = members;
  t.counts["members_expected"] = expected_members(builder, b);
  t.checks["member_count"] = members == t.counts["members_expected"];
  if (auto dummies = expected_dummies(builder, b)) {
    const auto it = b.groups.find("dummies");
    const auto have = static_cast<std::int64_t>(it == b.groups.end() ? 0 : it->second.size());
    t.counts["dummies"] = have;
    t.counts["dummies_expected"] = *dummies;
    t.checks["dummy_count"] = have == *dummies;
  }
  if (b.family) {
    t.checks["class_conformance"] = class_conforms(builder, *b.family);
    t.checks["layout_matches"] = layout_matches(*b.family, b.expected);
  } else {
    t.checks["layout_matches"] = b.realized() == b.expected;
  }
  if (builder == "domset_co3track")
    t.checks["domset_properties"] = check_domset_properties(b).all();
}

void run_trial(const std::string &name, const Plan &plan, const Source &src, const VerifyOptions &opt,
               TrialRecord &t) {
  try {
    auto t0 = Clock::now();
    const auto sr = solve_source(src, opt.limits);
    t.source_ms = ms_since(t0);
    t.source_status = to_string(sr.status);
    t.source_answer = sr.feasible();

    const ReductionBundle b = build(plan.builder, src);
    t.source_digest = b.source_digest;
    t.params = b.params;
    if (plan.cut) {
      const auto cp = derive_cutting_params(b, *plan.cut);
      t.params["cut_k"] = cp.k;
      t.params["cut_l"] = cp.l;
    }
    structural_checks(plan.builder, b, t);

    t0 = Clock::now();
    const auto tr = solve_target(b, plan, opt.limits);
    t.target_ms = ms_since(t0);
    t.target_status = to_string(tr.status);
    t.target_answer = tr.feasible();
    t.agree = !sr.exhausted() && !tr.exhausted() && sr.feasible() == tr.feasible();

    if (plan.builder == "domset_co3track" && !plan.cut && sr.feasible()) {
      // A dominating set that is also a clique, hence connected.
      const Graph q = b.question_graph();
      const auto kp = static_cast<std::size_t>(b.param("k_prime"));
      const auto cr = solve_domset(q, kp, DomVariant::Clique, false, opt.limits);
      t.checks["clique_connected_witness"] = cr.feasible() && is_dominating_set(q, cr.witness) &&
                                              satisfies_variant(q, cr.witness, DomVariant::Clique) &&
                                              satisfies_variant(q, cr.witness, DomVariant::Connected);
    }
    (void)name;
  } catch (const Error &e) {
    t.error = e.what();
    t.agree = false;
  }
}

std::vector<std::pair<std::string, Source>> anchored_sources(const std::string &builder) {
  std::vector<std::pair<std::string, Source>> out;
  auto colored = [](ColoredGraph cg) {
    Source s;
    s.kind = "colored";
    s.k = cg.k;
    s.cg = std::move(cg);
    return s;
  };
  auto rb = [](RBInstance r) {
    Source s;
    s.kind = "rb";
    s.k = r.k;
    s.rb = std::move(r);
    return s;
  };
  auto plain = [](Graph g, std::size_t k) {
    Source s;
    s.kind = "graph";
    s.g = std::move(g);
    s.k = k;
    return s;
  };
  const std::string src_kind = reduction_source_kind(builder);
  if (src_kind == "colored") {
    out.push_back({"anchored:sample", colored(sample_colored_instance())});
    // Dropping e2 keeps every edge class non-empty.
    out.push_back({"anchored:sample-e2", colored(sample_colored_without(2))});
  } else if (src_kind == "rb") {
    out.push_back({"anchored:sample-rb", rb(sample_rb_instance())});
    auto no = sample_rb_instance();
    no.edges.pop_back();
    out.push_back({"anchored:sample-rb-v3b3", rb(make_rb_instance(no.k, no.red_colors, no.blue_count, no.edges))});
  } else {
    Graph k4 = pad_isolated(complete_graph(4), 10);
    out.push_back({"anchored:k4+6", plain(k4, 3)});
    out.push_back({"anchored:c5+5", plain(pad_isolated(cycle_graph(5), 10), 3)});
  }
  for (auto &[origin, s] : out)
    s.d = 2;
  return out;
}

// Desk-scale envelope per builder: k range and maximum n.
struct Envelope {
  std::size_t k_lo, k_hi, n_hi;
  bool nonempty_pairs;
};

Envelope envelope_for(const std::string &builder) {
  if (builder == "domset_co3track")
    return {1, 3, 8, true};
  if (builder == "perfectcode_unit2track")
    return {1, 3, 7, true};
  if (builder == "dist_perfectcode_unit2track")
    return {1, 3, 6, false};
  if (builder == "cliquepartition_unit2interval")
    return {1, 3, 5, true};
  if (builder == "irredundant")
    return {1, 2, 5, false};
  if (builder == "dist_domset_unit2track" || builder == "dist_domset_co3interval")
    return {1, 3, 6, false};
  return {1, 3, 8, false};
}

Source random_source(const std::string &builder, std::uint64_t seed, std::size_t trial_index, Planted &mode,
                     const VerifyOptions &opt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x5eedu};
  std::mt19937_64 rng(seq);
  const Envelope env = envelope_for(builder);
  auto draw = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  mode = trial_index % 3 == 0 ? Planted::Yes : trial_index % 3 == 1 ? Planted::No : Planted::Random;
  // With every edge class non-empty, a no-instance needs three colors and a spare vertex.
  const bool tight = env.nonempty_pairs && mode == Planted::No;
  const std::size_t k = tight ? env.k_hi : draw(env.k_lo, env.k_hi);
  const std::size_t n = draw(std::max<std::size_t>(k + (tight ? 1 : 0), 2), std::max<std::size_t>(env.n_hi, k + 1));
  const std::uint64_t gen_seed = rng();

  Source s;
  s.k = k;
  s.kind = reduction_source_kind(builder);
  s.d = opt.d ? *opt.d : 2 + trial_index % 2;
  if (s.kind == "rb") {
    const std::size_t blues = draw(1, 5);
    s.rb = gen_rb_instance(n, k, blues, 0.5, mode, gen_seed);
    return s;
  }
  if (k == 1 && mode == Planted::No)
    mode = Planted::Yes;
  GenSpec spec;
  spec.n = n;
  spec.k = k;
  spec.planted = mode;
  spec.seed = gen_seed;
  spec.nonempty_pairs = env.nonempty_pairs;
  s.cg = gen_colored_graph(spec);
  if (s.kind == "graph") {
    const std::size_t need = builder == "sep_balanced2track" ? k + 2 * choose2(k) + 1 : k + choose2(k) + 1;
    s.g = pad_isolated(s.cg.graph, need);
  }
  return s;
}

} // namespace

VerifyReport verify_reduction(const std::string &name, const VerifyOptions &opt) {
  if (std::find(verify_names().begin(), verify_names().end(), name) == verify_names().end())
    throw Error(ErrorKind::InvalidArgument, "unknown reduction '" + name + "'");
  const Plan plan = plan_for(name);
  if (opt.d && *opt.d < 2 && is_distance_builder(plan.builder))
    throw Error(ErrorKind::BadDistance, "distance must be at least 2");
  VerifyReport rep;
  rep.name = name;
  if (opt.anchored)
    for (auto &[origin, src] : anchored_sources(plan.builder)) {
      Source s = src;
      if (opt.d)
        s.d = *opt.d;
      TrialRecord t;
      t.seed = 0;
      t.origin = origin;
      run_trial(name, plan, s, opt, t);
      if (origin == "anchored:sample" && plan.builder == "domset_co3track" && t.error.empty()) {
        const auto b = reduce_domset_co3track(s.cg);
        const Graph q = b.question_graph();
        std::vector<Vertex> w;
        for (const auto &l : sample_witness_labels())
          w.push_back(q.find(l));
        t.checks["sample_witness_dominates"] = is_dominating_set(q, w);
      }
      rep.trials.push_back(std::move(t));
    }
  for (std::size_t i = 0; i < opt.trials; ++i) {
    TrialRecord t;
    t.seed = opt.seed + i;
    Planted mode = Planted::Random;
    try {
      Source s = random_source(plan.builder, t.seed, i, mode, opt);
      t.origin = std::string("planted:") + to_string(mode);
      run_trial(name, plan, s, opt, t);
    } catch (const Error &e) {
      t.origin = std::string("planted:") + to_string(mode);
      t.error = e.what();
    }
    rep.trials.push_back(std::move(t));
  }
  return rep;
}

Json to_json(const VerifyReport &r, bool with_timings) {
  Json j;
  j["type"] = "verify_report";
  j["reduction"] = r.name;
  j["pass"] = r.pass();
  j["trial_count"] = r.trials.size();
  j["agreeing"] = r.agreeing();
  j["exhausted"] = r.exhausted();
  j["failed_checks"] = r.failed_checks();
  Json trials = Json::array();
  for (const auto &t : r.trials) {
    Json tj;
    tj["seed"] = t.seed;
    tj["origin"] = t.origin;
    tj["source_digest"] = t.source_digest;
    Json params = Json::object();
    for (const auto &[k, v] : t.params)
      params[k] = v;
    tj["params"] = params;
    tj["source_status"] = t.source_status;
    tj["target_status"] = t.target_status;
    tj["source_answer"] = t.source_answer;
    tj["target_answer"] = t.target_answer;
    tj["agree"] = t.agree;
    Json checks = Json::object();
    for (const auto &[k, v] : t.checks)
      checks[k] = v;
    tj["structural_checks"] = checks;
    Json counts = Json::object();
    for (const auto &[k, v] : t.counts)
      counts[k] = v;
    tj["counts"] = counts;
    if (!t.error.empty())
      tj["error"] = t.error;
    if (with_timings)
      tj["timings_ms"] = Json{{"source", t.source_ms}, {"target", t.target_ms}};
    trials.push_back(tj);
  }
  j["trials"] = trials;
  return j;
}

// ---------------------------------------------------------------------------

FuzzReport domset_fuzz(const ReductionBundle &b, std::uint64_t seed, std::size_t count) {
  if (b.name != "domset_co3track" || !b.family)
    throw Error(ErrorKind::WrongBundleKind, "the fuzz pass applies to domset_co3track bundles");
  std::mt19937_64 rng(seed);
  const Graph original = b.realized();
  FuzzReport out;
  const IntervalFamily &f = *b.family;
  for (std::size_t attempt = 0; out.effective < count && attempt < 1000 * count; ++attempt) {
    const std::size_t mi = std::uniform_int_distribution<std::size_t>(0, f.members.size() - 1)(rng);
    const auto &parts = f.members[mi].parts;
    const std::size_t pi = std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng);
    const bool upper = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    ReductionBundle mutated = b;
    Interval &iv = mutated.family->members[mi].parts[pi];
    (upper ? iv.hi : iv.lo) += 2;
    const bool valid = validate_family(*mutated.family).ok();
    if (valid && mutated.realized() == original) {
      ++out.discarded;
      continue;
    }
    ++out.effective;
    const bool props = check_domset_properties(mutated).all();
    const bool layout = layout_matches(*mutated.family, b.expected);
    out.invalid += valid ? 0 : 1;
    out.detected_by_properties += props ? 0 : 1;
    out.detected += (!valid || !layout || !props) ? 1 : 0;
    out.mutations.push_back(f.members[mi].label + " part " + std::to_string(pi + 1) + (upper ? " hi" : " lo") + "+2");
  }
  return out;
}

} // namespace mig
