#pragma once

#include "mig/graph.hpp"
#include "mig/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mig {

/// Open interval (lo, hi) on a track. Single-line families use track 0.
struct Interval {
  int track = 0;
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool operator==(const Interval &) const = default;
};

/// Open intervals meet iff they share a track and max(lo) < min(hi). Intervals
/// that only touch at an endpoint are disjoint.
bool intersects(const Interval &a, const Interval &b);

struct MultiInterval {
  std::string label;
  std::vector<Interval> parts;

  bool operator==(const MultiInterval &) const = default;
};

enum class FamilyKind { TInterval, TTrack };

const char *to_string(FamilyKind kind);

struct IntervalFamily {
  FamilyKind kind = FamilyKind::TTrack;
  int t = 1;
  bool unit = false;
  bool balanced = false;
  Rational unit_length = 1;
  std::vector<MultiInterval> members;

  std::size_t part_count() const;
  std::vector<std::string> labels() const;
  bool operator==(const IntervalFamily &) const = default;
};

struct Violation {
  std::string rule; // kind, disjointness, unit, balanced, track, empty, label
  std::string label;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(const std::string &rule) const;
  std::string summary() const;
};

/// Report-style check of every family constraint. Members may have fewer
/// than t parts; missing parts are treated as implicit padding placed far away
/// from everything else.
ValidationReport validate_family(const IntervalFamily &f);

/// One vertex per member (in member order, carrying its label); edge iff some
/// part of one member meets some part of the other. Throws InvalidFamily when
/// validate_family fails.
Graph build_intersection_graph(const IntervalFamily &f);

/// Same without validation; used for deliberately broken (mutated) families.
Graph build_intersection_graph_unchecked(const IntervalFamily &f);

/// True iff the realized intersection graph has exactly the expected edges.
/// Throws LabelMismatch when the label sequences differ.
bool layout_matches(const IntervalFamily &f, const Graph &expected);

enum class SameRow { Include, Exclude };

/// Two slanted columns of unit intervals on one track. Both columns are
/// pairwise intersecting. Left row r meets right row s iff s <= r (Include)
/// or s < r (Exclude); rows are 0-based here.
struct Staircase {
  std::vector<Interval> left;
  std::vector<Interval> right;
  Rational anchor;
  Rational width;

  /// Unit interval meeting every right-column interval and no left one.
  Interval right_hugger() const;
  /// Unit interval meeting every left-column interval and no right one.
  Interval left_hugger() const;
};

Staircase staircase(std::size_t rows, SameRow same_row, const Rational &anchor, int track = 0);

/// Declared pattern of a staircase as a graph over L1..Ln, R1..Rn.
Graph staircase_pattern(std::size_t rows, SameRow same_row);

/// The staircase as a family (labels L1..Ln, R1..Rn) for layout checks.
IntervalFamily staircase_family(const Staircase &s);

/// Complement of C_{4n+1} as a unit 2-interval family: members a_1..a_n carry
/// one interval, b_1..b_{3n+1} two. Circle positions are b_1..b_{3n+1}
/// a_1..a_n; arcs have length 2n on a circle of perimeter 4n+1, so
/// unit_length is 2n.
IntervalFamily cycle_complement_unit2interval(std::size_t n);

/// Circle position of each member of cycle_complement_unit2interval(n), in
/// member order.
std::vector<std::size_t> cycle_complement_positions(std::size_t n);

/// Expected intersection graph of cycle_complement_unit2interval(n), computed
/// from circle positions only: members are non-adjacent iff their positions
/// differ by 2n modulo 4n+1.
Graph cycle_complement_expected(std::size_t n);

/// Maps every endpoint x to scale * x + offset (scale > 0).
IntervalFamily transformed(const IntervalFamily &f, const Rational &scale, const Rational &offset);

} // namespace mig
