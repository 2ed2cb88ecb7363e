#include "mig/errors.hpp"
#include "mig/reductions.hpp"
#include "mig/solvers.hpp"
#include "mig/verify.hpp"

#include "doctest.h"

#include <algorithm>
#include <functional>

using namespace mig;

namespace {

ColoredGraph colored(std::size_t n, const std::vector<Edge> &edges, const std::vector<int> &colors, std::size_t k) {
  Graph g(n, default_labels(n));
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return canonicalize_colored(g, edges, colors, k);
}

ColoredGraph sample_minus(std::vector<std::size_t> drop) {
  const std::vector<Edge> all{{0, 2}, {0, 3}, {1, 3}, {2, 3}};
  std::vector<Edge> keep;
  for (std::size_t r = 0; r < all.size(); ++r)
    if (std::find(drop.begin(), drop.end(), r + 1) == drop.end())
      keep.push_back(all[r]);
  return colored(4, keep, {1, 1, 2, 3}, 3);
}

ColoredGraph single_edge() { return colored(2, {{0, 1}}, {1, 2}, 2); }

ErrorKind kind_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

std::size_t kp(const ReductionBundle &b) { return static_cast<std::size_t>(b.param("k_prime")); }

Graph padded(const Graph &g, std::size_t n) {
  Graph out(n, default_labels(n));
  for (auto [u, v] : g.edges())
    out.add_edge(u, v);
  return out;
}

void check_family(const ReductionBundle &b) {
  REQUIRE(b.family);
  CHECK(validate_family(*b.family).ok());
  CHECK(layout_matches(*b.family, b.expected));
}

} // namespace

TEST_CASE("complement domination on the sample instance") {
  const auto b = reduce_domset_co3track(sample_colored_instance());
  check_family(b);
  CHECK(b.member_count() == 22);
  CHECK(kp(b) == 6);
  CHECK(b.complement);
  CHECK(b.family->t == 3);
  const Graph q = b.question_graph();
  std::vector<Vertex> w;
  for (const auto &l : sample_witness_labels())
    w.push_back(q.find(l));
  CHECK(is_dominating_set(q, w));
  CHECK(w.size() == 6);
  CHECK(solve_domset(q, 6).feasible());
  CHECK(check_domset_properties(b).all());
  const auto flags = domset_variant_checks(b, sample_witness_labels());
  CHECK(flags.clique);
  CHECK(flags.connected);
}

TEST_CASE("complement domination with an edge removed") {
  const auto no = reduce_domset_co3track(sample_colored_without(2));
  CHECK_FALSE(solve_multicolored_clique(sample_colored_without(2)).feasible());
  CHECK_FALSE(solve_domset(no.question_graph(), 6).feasible());

  // Removing e1 empties a color-pair class; the pair member then meets every
  // other member and the target stays feasible.
  const auto e1 = reduce_domset_co3track(sample_colored_without(1));
  CHECK_FALSE(solve_multicolored_clique(sample_colored_without(1)).feasible());
  const auto r = solve_domset(e1.question_graph(), 6);
  CHECK(r.feasible());
  const Graph q = e1.question_graph();
  CHECK(std::any_of(r.witness.begin(), r.witness.end(), [&](Vertex v) { return q.label(v) == "PAIR(1,2)"; }));
}

TEST_CASE("complement domination trivial source") {
  const auto cg = colored(1, {}, {1}, 1);
  const auto b = reduce_domset_co3track(cg);
  CHECK(b.member_count() == 2);
  CHECK(kp(b) == 1);
  CHECK(solve_domset(b.question_graph(), 1).feasible());
  CHECK(check_domset_properties(b).all());
}

TEST_CASE("color member property under part deletion") {
  const auto original = reduce_domset_co3track(sample_colored_instance());
  auto drop_part = [&](int track) {
    auto b = original;
    auto &members = b.family->members;
    auto it = std::find_if(members.begin(), members.end(), [](const auto &m) { return m.label == "COLOR(1)"; });
    REQUIRE(it != members.end());
    auto &parts = it->parts;
    parts.erase(std::remove_if(parts.begin(), parts.end(), [&](const Interval &p) { return p.track == track; }),
                parts.end());
    return b;
  };
  // The track-3 part only meets members the track-1 part already meets.
  const auto no_track3 = drop_part(3);
  CHECK(no_track3.realized() == original.realized());
  CHECK(check_domset_properties(no_track3).holds[1]);

  const auto no_track1 = drop_part(1);
  CHECK_FALSE(check_domset_properties(no_track1).holds[1]);
  CHECK_FALSE(layout_matches(*no_track1.family, original.expected));
  CHECK_THROWS_AS(check_domset_properties(reduce_irredundant(sample_colored_instance())), Error);
}

TEST_CASE("variant checks on small witnesses") {
  const auto b = reduce_domset_co3track(sample_colored_instance());
  CHECK(domset_variant_checks(b, {"V(1)"}).connected);
  const Graph q = b.question_graph();
  std::vector<std::string> pair;
  for (Vertex u = 0; u < q.vertex_count() && pair.empty(); ++u)
    for (Vertex v = u + 1; v < q.vertex_count() && pair.empty(); ++v)
      if (q.adjacent(u, v))
        pair = {q.label(u), q.label(v)};
  REQUIRE(pair.size() == 2);
  CHECK_FALSE(domset_variant_checks(b, pair).independent);
}

TEST_CASE("unit 2-track distance domination") {
  const RBInstance fig5 = sample_rb_instance();
  for (std::size_t d : {2u, 3u}) {
    const auto b = reduce_dist_domset_unit2track(fig5, d);
    check_family(b);
    CHECK(b.family->unit);
    CHECK(solve_rb_domset(fig5).feasible() == solve_distance_domset(b.question_graph(), kp(b), d).feasible());
  }
  const RBInstance yes = make_rb_instance(1, {1}, 1, {{0, 0}});
  const RBInstance no = make_rb_instance(1, {1}, 1, {});
  const auto by = reduce_dist_domset_unit2track(yes, 2);
  const auto bn = reduce_dist_domset_unit2track(no, 2);
  CHECK(solve_distance_domset(by.question_graph(), kp(by), 2).feasible());
  CHECK_FALSE(solve_distance_domset(bn.question_graph(), kp(bn), 2).feasible());
  CHECK(kind_of([&] { reduce_dist_domset_unit2track(yes, 1); }) == ErrorKind::BadDistance);
}

TEST_CASE("co-3-interval distance domination") {
  const RBInstance fig5 = sample_rb_instance();
  const auto b = reduce_dist_domset_co3interval(fig5);
  check_family(b);
  CHECK(b.complement);
  CHECK(b.family->kind == FamilyKind::TInterval);
  CHECK(b.family->t == 3);
  CHECK(solve_rb_domset(fig5).feasible() == solve_distance_domset(b.question_graph(), kp(b), 2).feasible());

  const RBInstance no_blue = make_rb_instance(2, {1, 2}, 0, {});
  const auto be = reduce_dist_domset_co3interval(no_blue);
  CHECK(solve_distance_domset(be.question_graph(), kp(be), 2).feasible());

  const RBInstance lonely = make_rb_instance(2, {1, 2}, 2, {{0, 0}, {1, 0}});
  const auto bl = reduce_dist_domset_co3interval(lonely);
  CHECK_FALSE(solve_rb_domset(lonely).feasible());
  CHECK_FALSE(solve_distance_domset(bl.question_graph(), kp(bl), 2).feasible());
}

TEST_CASE("unit 2-track perfect code") {
  const auto b = reduce_perfectcode_unit2track(sample_colored_instance());
  check_family(b);
  CHECK(kp(b) == 9);
  CHECK(b.groups.at("dummies").size() == 2 * 3 + 4 * 3);
  CHECK(solve_perfect_code(b.question_graph(), 9).feasible());

  CHECK(kind_of([] { reduce_perfectcode_unit2track(sample_minus({4})); }) == ErrorKind::EmptyColorClass);

  const auto one = reduce_perfectcode_unit2track(single_edge());
  CHECK(kp(one) == 4);
  CHECK(solve_perfect_code(one.question_graph(), 4).feasible());
}

TEST_CASE("unit 2-track distance perfect code") {
  const auto b = reduce_dist_perfectcode_unit2track(sample_colored_instance(), 2);
  check_family(b);
  CHECK(kp(b) == 6);
  CHECK(b.groups.at("dummies").size() == 4 * 3 + 4 * 3);
  CHECK(solve_distance_perfect_code(b.question_graph(), 6, 2).feasible());

  const auto no = reduce_dist_perfectcode_unit2track(sample_minus({1}), 2);
  CHECK_FALSE(solve_distance_perfect_code(no.question_graph(), kp(no), 2).feasible());

  const auto d3 = reduce_dist_perfectcode_unit2track(single_edge(), 3);
  check_family(d3);
  CHECK(kp(d3) == 3);
  CHECK(solve_distance_perfect_code(d3.question_graph(), 3, 3).feasible());
  CHECK(kind_of([] { reduce_dist_perfectcode_unit2track(single_edge(), 1); }) == ErrorKind::BadDistance);
}

TEST_CASE("unit 2-interval clique partition") {
  const auto b = reduce_cliquepartition_unit2interval(sample_colored_instance());
  check_family(b);
  CHECK(b.family->unit);
  CHECK(b.member_count() == 42);
  CHECK(kp(b) == 15);
  const auto r = solve_clique_partition(b.question_graph(), 15);
  CHECK(r.feasible());
  CHECK(is_clique_partition(b.question_graph(), r.parts));

  CHECK(kind_of([] { reduce_cliquepartition_unit2interval(sample_minus({2, 3})); }) == ErrorKind::EmptyColorClass);

  const auto one = reduce_cliquepartition_unit2interval(single_edge());
  CHECK(kp(one) == 8);
  CHECK(solve_clique_partition(one.question_graph(), 8).feasible());
}

TEST_CASE("balanced 2-track separation") {
  CHECK(kind_of([] { reduce_sep_balanced2track(complete_graph(4), 3); }) == ErrorKind::TooFewVertices);

  const auto yes = reduce_sep_balanced2track(padded(complete_graph(4), 10), 3);
  check_family(yes);
  CHECK(yes.family->balanced);
  CHECK(yes.member_count() == 10 + 2 * 6);
  CHECK(yes.param("l_prime") == 6);
  CHECK(solve_separating(yes.question_graph(), 3, 6).feasible());

  const auto no = reduce_sep_balanced2track(cycle_graph(10), 3);
  CHECK_FALSE(solve_separating(no.question_graph(), 3, 6).feasible());
}

TEST_CASE("balanced co-3-track separation") {
  CHECK(kind_of([] { reduce_sep_cobal3track(complete_graph(4), 3); }) == ErrorKind::TooFewVertices);

  const auto yes = reduce_sep_cobal3track(padded(complete_graph(4), 8), 3);
  check_family(yes);
  CHECK(yes.family->balanced);
  CHECK(yes.complement);
  CHECK(yes.param("l_prime") == 3);
  CHECK(solve_separating(yes.question_graph(), 3, 3).feasible());

  const auto no = reduce_sep_cobal3track(padded(cycle_graph(5), 8), 3);
  CHECK_FALSE(solve_separating(no.question_graph(), 3, 3).feasible());
}

TEST_CASE("cutting parameters") {
  Graph g = padded(complete_graph(4), 10);
  g.add_edge(4, 5);
  g.add_edge(6, 7);
  g.add_edge(8, 9);
  const auto two = reduce_sep_balanced2track(g, 3);
  CHECK(derive_cutting_params(two, CutVariant::Connected).l == 19);
  CHECK(derive_cutting_params(two, CutVariant::Connected).k == 3);

  const auto three = reduce_sep_cobal3track(padded(complete_graph(4), 8), 3);
  CHECK(derive_cutting_params(three, CutVariant::Connected).l == 8);
  CHECK(derive_cutting_params(three, CutVariant::Components).l == 4);
  CHECK(derive_cutting_params(two, CutVariant::Components).l == 4);

  CHECK(kind_of([] { derive_cutting_params(reduce_domset_co3track(sample_colored_instance()), CutVariant::Connected); }) ==
        ErrorKind::WrongBundleKind);
}

TEST_CASE("irredundant construction") {
  const auto b = reduce_irredundant(sample_colored_instance());
  REQUIRE(b.graph);
  CHECK(b.member_count() == 32);
  CHECK(kp(b) == 24);
  const auto r = solve_irredundant(b.question_graph(), 24);
  CHECK(r.feasible());
  CHECK(is_irredundant(b.question_graph(), r.witness));

  const auto no = reduce_irredundant(sample_minus({4}));
  CHECK_FALSE(solve_irredundant(no.question_graph(), 24).feasible());

  const auto one = reduce_irredundant(colored(1, {}, {1}, 1));
  CHECK(one.member_count() == 3);
  CHECK(one.question_graph().edge_count() == 0);
  CHECK(solve_irredundant(one.question_graph(), 3).feasible());

  const auto apart = reduce_irredundant(colored(2, {}, {1, 2}, 2));
  CHECK(kp(apart) == 11);
  CHECK(apart.member_count() == 6);
  CHECK_FALSE(solve_irredundant(apart.question_graph(), 11).feasible());
}

TEST_CASE("every builder realizes its expected graph on the sample instance") {
  check_family(reduce_domset_co3track(sample_colored_instance()));
  check_family(reduce_perfectcode_unit2track(sample_colored_instance()));
  for (std::size_t d = 2; d <= 5; ++d)
    check_family(reduce_dist_perfectcode_unit2track(sample_colored_instance(), d));
  for (std::size_t d = 2; d <= 5; ++d)
    check_family(reduce_dist_domset_unit2track(sample_rb_instance(), d));
  check_family(reduce_cliquepartition_unit2interval(sample_colored_instance()));
  const auto irr = reduce_irredundant(sample_colored_instance());
  CHECK(irr.realized() == irr.expected);
}

TEST_CASE("source digests are stable and distinguish instances") {
  const auto a = reduce_domset_co3track(sample_colored_instance());
  const auto b = reduce_domset_co3track(sample_colored_instance());
  const auto c = reduce_domset_co3track(sample_colored_without(2));
  CHECK(a.source_digest == b.source_digest);
  CHECK(a.source_digest != c.source_digest);
  CHECK(a.source_digest.size() == 16);
}

TEST_CASE("registry") {
  CHECK(reduction_names().size() == 9);
  CHECK(reduction_source_kind("dist_domset_co3interval") == "rb");
  CHECK(reduction_source_kind("sep_cobal3track") == "graph");
  CHECK(reduction_source_kind("irredundant") == "colored");
  CHECK(target_problem_from_string(to_string(TargetProblem::CliquePartition)) == TargetProblem::CliquePartition);
}
