#include "mig/errors.hpp"
#include "mig/interval.hpp"

#include "doctest.h"

using namespace mig;

namespace {

IntervalFamily single_line(std::vector<MultiInterval> members, int t = 2) {
  IntervalFamily f;
  f.kind = FamilyKind::TInterval;
  f.t = t;
  f.members = std::move(members);
  return f;
}

bool single_odd_cycle(const Graph &g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2)
      return false;
  return connected_components(g).size() == 1 && g.vertex_count() % 2 == 1;
}

} // namespace

TEST_CASE("open intervals") {
  CHECK_FALSE(intersects({0, 0, 1}, {0, 1, 2}));
  CHECK(intersects({0, 0, 2}, {0, 1, 3}));
  CHECK_FALSE(intersects({1, 0, 5}, {2, 0, 5}));
  CHECK(intersects({0, 0, 1}, {0, 0, 1}));
  CHECK(intersects({0, 1, 3}, {0, 0, 2}) == intersects({0, 0, 2}, {0, 1, 3}));
}

TEST_CASE("intersection graph of disjoint 2-track members") {
  IntervalFamily f;
  f.kind = FamilyKind::TTrack;
  f.t = 2;
  f.members = {{"A", {{1, 0, 1}, {2, 0, 1}}}, {"B", {{1, 2, 3}, {2, 2, 3}}}};
  const Graph g = build_intersection_graph(f);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 0);
  CHECK(g.label(1) == "B");
}

TEST_CASE("edge count is invariant under member permutation") {
  auto f = single_line({{"A", {{0, 0, 2}}}, {"B", {{0, 1, 3}, {0, 5, 6}}}, {"C", {{0, Rational(11, 2), 7}}}});
  const auto e1 = build_intersection_graph(f).edge_count();
  std::swap(f.members[0], f.members[2]);
  CHECK(build_intersection_graph(f).edge_count() == e1);
  CHECK(e1 == 2);
}

TEST_CASE("validation reports") {
  auto overlap = single_line({{"M", {{0, 0, 1}, {0, Rational(1, 2), 2}}}});
  const auto r = validate_family(overlap);
  CHECK_FALSE(r.ok());
  CHECK(r.count("disjointness") == 1);
  CHECK(r.violations[0].label == "M");
  CHECK_THROWS_AS(build_intersection_graph(overlap), Error);

  auto unit = single_line({{"A", {{0, 0, 1}}}, {"B", {{0, 3, 5}}}});
  unit.unit = true;
  unit.unit_length = 1;
  CHECK(validate_family(unit).count("unit") == 1);

  auto balanced = single_line({{"A", {{0, 0, 1}, {0, 3, 5}}}});
  balanced.balanced = true;
  CHECK(validate_family(balanced).count("balanced") == 1);

  IntervalFamily track;
  track.kind = FamilyKind::TTrack;
  track.t = 2;
  track.members = {{"T", {{1, 0, 1}, {1, 2, 3}}}};
  CHECK_FALSE(validate_family(track).ok());
}

TEST_CASE("staircase small cases") {
  const Staircase ex = staircase(1, SameRow::Exclude, 0);
  CHECK_FALSE(intersects(ex.left[0], ex.right[0]));
  const Staircase in = staircase(1, SameRow::Include, 0);
  CHECK(intersects(in.left[0], in.right[0]));
}

TEST_CASE("staircase pattern by pairwise scan") {
  for (std::size_t rows = 1; rows <= 6; ++rows) {
    for (SameRow mode : {SameRow::Include, SameRow::Exclude}) {
      const Staircase s = staircase(rows, mode, Rational(3, 2));
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t q = 0; q < rows; ++q) {
          const bool want = mode == SameRow::Include ? q <= r : q < r;
          CHECK(intersects(s.left[r], s.right[q]) == want);
          CHECK(intersects(s.right[r], s.right[q]));
          CHECK(intersects(s.left[r], s.left[q]));
        }
        CHECK(s.left[r].length() == 1);
        CHECK(s.right[r].length() == 1);
        CHECK(s.left[r].lo >= s.anchor);
        CHECK(s.right[r].hi <= s.anchor + s.width);
      }
      const Interval rh = s.right_hugger(), lh = s.left_hugger();
      for (std::size_t r = 0; r < rows; ++r) {
        CHECK(intersects(rh, s.right[r]));
        CHECK_FALSE(intersects(rh, s.left[r]));
        CHECK(intersects(lh, s.left[r]));
        CHECK_FALSE(intersects(lh, s.right[r]));
      }
      CHECK(layout_matches(staircase_family(s), staircase_pattern(rows, mode)));
    }
  }
}

TEST_CASE("layout matches detects perturbation and label mismatch") {
  const Staircase s = staircase(2, SameRow::Include, 0);
  IntervalFamily f = staircase_family(s);
  const Graph pattern = staircase_pattern(2, SameRow::Include);
  CHECK(layout_matches(f, pattern));
  f.members[0].parts[0].lo -= 10;
  f.members[0].parts[0].hi -= 10;
  CHECK_FALSE(layout_matches(f, pattern));

  CHECK(layout_matches(IntervalFamily{}, Graph{}));
  CHECK_THROWS_AS(layout_matches(staircase_family(s), Graph(4, default_labels(4))), Error);
}

TEST_CASE("complemented odd cycle family, n = 1") {
  const IntervalFamily f = cycle_complement_unit2interval(1);
  CHECK(f.members.size() == 5);
  CHECK(f.part_count() == 9);
  CHECK(f.unit);
  for (const auto &m : f.members)
    for (const auto &p : m.parts)
      CHECK(p.length() == f.unit_length);
  const Graph g = build_intersection_graph(f);
  CHECK(single_odd_cycle(complement(g)));
  CHECK(complement(g).vertex_count() == 5);
}

TEST_CASE("complemented odd cycle family, n = 1..5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const IntervalFamily f = cycle_complement_unit2interval(n);
    CHECK(validate_family(f).ok());
    CHECK(f.members.size() == 4 * n + 1);
    std::size_t singles = 0;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
      const bool is_a = i < n;
      CHECK(f.members[i].label[0] == (is_a ? 'a' : 'b'));
      CHECK(f.members[i].parts.size() == (is_a ? 1u : 2u));
      singles += f.members[i].parts.size() == 1 ? 1 : 0;
    }
    CHECK(singles == n);
    const Graph co = complement(build_intersection_graph(f));
    CHECK(single_odd_cycle(co));
    CHECK(layout_matches(f, cycle_complement_expected(n)));
  }
}

TEST_CASE("affine transform preserves the intersection graph") {
  const IntervalFamily f = cycle_complement_unit2interval(2);
  const IntervalFamily g = transformed(f, Rational(1, 7), Rational(-3));
  CHECK(build_intersection_graph(g) == build_intersection_graph(f));
  CHECK(g.unit_length == f.unit_length * Rational(1, 7));
}
