#include "mig/errors.hpp"
#include "mig/ops.hpp"

#include "doctest.h"

#include <functional>

using namespace mig;

namespace {

std::size_t count_of(const std::string &text, const std::string &needle) {
  std::size_t c = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++c;
  return c;
}

ErrorKind kind_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("colored generator examples") {
  GenSpec spec;
  spec.n = 4;
  spec.k = 3;
  spec.planted = Planted::Yes;
  spec.seed = 7;
  const ColoredGraph g = gen_colored_graph(spec);
  CHECK(solve_multicolored_clique(g).feasible());
  for (auto [u, v] : g.graph.edges())
    CHECK(g.colors[u] != g.colors[v]);

  GenSpec empty;
  empty.n = 3;
  empty.k = 3;
  empty.edge_probability = 0;
  const ColoredGraph e = gen_colored_graph(empty);
  CHECK(e.graph.edge_count() == 0);
  CHECK_FALSE(solve_multicolored_clique(e).feasible());

  CHECK(to_json(gen_colored_graph(spec)) == to_json(gen_colored_graph(spec)));
  CHECK(kind_of([] {
          GenSpec bad;
          bad.n = 2;
          bad.k = 3;
          gen_colored_graph(bad);
        }) == ErrorKind::BadSpec);
}

TEST_CASE("planted no instances remove one clique edge") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenSpec spec;
    spec.n = 6;
    spec.k = 3;
    spec.planted = Planted::No;
    spec.seed = seed;
    CHECK_FALSE(solve_multicolored_clique(gen_colored_graph(spec)).feasible());
  }
}

TEST_CASE("red blue generator examples") {
  const RBInstance yes = gen_rb_instance(5, 2, 4, 0.5, Planted::Yes, 3);
  CHECK(solve_rb_domset(yes).feasible());
  const RBInstance none = gen_rb_instance(4, 2, 3, 0.0, Planted::Random, 3);
  CHECK_FALSE(solve_rb_domset(none).feasible());
  CHECK(to_json(gen_rb_instance(5, 2, 4, 0.5, Planted::No, 9)) == to_json(gen_rb_instance(5, 2, 4, 0.5, Planted::No, 9)));
  CHECK_FALSE(solve_rb_domset(gen_rb_instance(5, 2, 4, 0.5, Planted::No, 9)).feasible());
}

TEST_CASE("round trips") {
  const ColoredGraph cg = sample_colored_instance();
  CHECK(to_json(colored_from_json(to_json(cg))) == to_json(cg));
  CHECK(graph_from_json(to_json(cg.graph)) == cg.graph);
  const RBInstance rb = sample_rb_instance();
  CHECK(to_json(rb_from_json(to_json(rb))) == to_json(rb));

  for (const auto &name : reduction_names()) {
    ReductionBundle b;
    if (name == "dist_domset_unit2track")
      b = reduce_dist_domset_unit2track(rb, 3);
    else if (name == "dist_domset_co3interval")
      b = reduce_dist_domset_co3interval(rb);
    else if (name.rfind("sep_", 0) == 0)
      b = reduce_by_name(name, to_json(pad_isolated(complete_graph(4), 12)), std::nullopt, 3);
    else
      b = reduce_by_name(name, to_json(cg), 2);
    const auto text = dump_json(to_json(b));
    const ReductionBundle back = bundle_from_json(parse_json_text(text));
    CHECK(dump_json(to_json(back)) == text);
    CHECK(back.params == b.params);
    CHECK(back.expected == b.expected);
    if (b.family)
      CHECK(*back.family == *b.family);
    else
      CHECK(*back.graph == *b.graph);
  }
}

TEST_CASE("graph documents use 1-based indices") {
  const Json j = to_json(path_graph(3));
  CHECK(j["n"] == 3);
  CHECK(j["edges"][0][0] == 1);
  CHECK(j["edges"][0][1] == 2);
}

TEST_CASE("parse diagnostics") {
  const Json bad = parse_json_text(R"({"type": "family", "kind": "t-interval", "t": 1, "unit": false,
    "balanced": false, "unit_length": "1",
    "members": [{"label": "Q7", "parts": [{"track": 0, "lo": "2", "hi": "1"}]}]})");
  try {
    family_from_json(bad);
    FAIL("accepted a reversed interval");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("'Q7'") != std::string::npos);
  }
  try {
    parse_json_text("{\n  \"n\": 3,\n  oops\n}");
    FAIL("accepted malformed json");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("3:") != std::string::npos);
  }
  CHECK(kind_of([] { graph_from_json(parse_json_text(R"({"type": "graph", "n": 2, "edges": [[1, 3]]})")); }) ==
        ErrorKind::Parse);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
}

TEST_CASE("render examples") {
  const IntervalFamily empty;
  const std::string ascii = render_family(empty, RenderFormat::Ascii);
  CHECK(count_of(ascii, "\n") == 2);
  CHECK(count_of(render_family(empty, RenderFormat::Svg), "<rect") == 0);

  IntervalFamily one;
  one.kind = FamilyKind::TInterval;
  one.unit = true;
  one.members = {{"A", {{0, 0, 1}}}};
  const std::string svg = render_family(one, RenderFormat::Svg, 30);
  CHECK(count_of(svg, "<rect class=\"bar\"") == 1);
  CHECK(svg.find("width=\"30.000\" height") != std::string::npos);
  CHECK(render_family(one, RenderFormat::Ascii, 5).find("|=====") != std::string::npos);

  const auto b = reduce_domset_co3track(sample_colored_instance());
  const std::string fig = render_family(*b.family, RenderFormat::Svg);
  CHECK(count_of(fig, "class=\"lane\"") == 3);
  CHECK(count_of(fig, "<rect class=\"bar\"") == b.family->part_count());
  CHECK(b.family->part_count() == 66);
  CHECK(fig == render_family(*b.family, RenderFormat::Svg));

  IntervalFamily broken = one;
  broken.members[0].parts.push_back({0, Rational(1, 2), 2});
  CHECK(kind_of([&] { render_family(broken, RenderFormat::Ascii); }) == ErrorKind::InvalidFamily);
}

TEST_CASE("verify reports") {
  VerifyOptions opt;
  opt.trials = 3;
  const auto rep = verify_reduction("domset_co3track", opt);
  REQUIRE(rep.trials.size() == 5);
  CHECK(rep.trials[0].origin == "anchored:sample");
  CHECK(rep.trials[0].source_answer);
  CHECK(rep.trials[0].target_answer);
  CHECK(rep.trials[0].params.at("k_prime") == 6);
  CHECK(rep.pass());
  CHECK(dump_json(to_json(rep)) == dump_json(to_json(verify_reduction("domset_co3track", opt))));

  CHECK(verify_reduction("irredundant", opt).pass());
  CHECK(verify_reduction("cut_components_cobal3track", opt).pass());
  CHECK(kind_of([&] { verify_reduction("nope", opt); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("single vertex irredundant bundle agrees") {
  const ColoredGraph cg = canonicalize_colored(Graph(1, default_labels(1)), {1}, 1);
  const auto b = reduce_irredundant(cg);
  CHECK(solve_multicolored_clique(cg).feasible() == solve_irredundant(b.question_graph(), 3).feasible());
}

TEST_CASE("document operations") {
  GenRequest req;
  req.n = 5;
  req.k = 2;
  req.planted = Planted::Yes;
  req.seed = 4;
  const Json src = generate_document(req);
  const ReductionBundle b = reduce_by_name("domset_co3track", src);
  SolveRequest sol;
  sol.problem = "domset";
  sol.k = static_cast<std::size_t>(b.param("k_prime"));
  const Json out = solve_document(sol, to_json(b));
  CHECK(out["status"] == "feasible");
  CHECK(out["witness"].size() <= sol.k);

  SolveRequest plain = sol;
  plain.complement = true;
  const Json on_family = solve_document(plain, to_json(*b.family));
  CHECK(on_family["status"] == "feasible");

  CHECK(kind_of([&] { reduce_by_name("perfectcode_unit2track", to_json(sample_rb_instance())); }) ==
        ErrorKind::WrongBundleKind);
  CHECK(kind_of([&] { reduce_by_name("dist_domset_unit2track", to_json(sample_rb_instance())); }) ==
        ErrorKind::BadDistance);
  CHECK(render_document(to_json(b), RenderFormat::Ascii) == render_family(*b.family, RenderFormat::Ascii));
}
