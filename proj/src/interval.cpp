#include "mig/interval.hpp"

#include "mig/errors.hpp"

#include <set>
#include <sstream>

namespace mig {

bool intersects(const Interval &a, const Interval &b) {
  return a.track == b.track && max(a.lo, b.lo) < min(a.hi, b.hi);
}

const char *to_string(FamilyKind kind) { return kind == FamilyKind::TInterval ? "t-interval" : "t-track"; }

std::size_t IntervalFamily::part_count() const {
  std::size_t c = 0;
  for (const auto &m : members)
    c += m.parts.size();
  return c;
}

std::vector<std::string> IntervalFamily::labels() const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (const auto &m : members)
    out.push_back(m.label);
  return out;
}

std::size_t ValidationReport::count(const std::string &rule) const {
  std::size_t c = 0;
  for (const auto &v : violations)
    c += v.rule == rule;
  return c;
}

std::string ValidationReport::summary() const {
  if (ok())
    return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < violations.size() && i < 5; ++i)
    os << "; " << violations[i].rule << " [" << violations[i].label << "] " << violations[i].detail;
  return os.str();
}

ValidationReport validate_family(const IntervalFamily &f) {
  ValidationReport rep;
  auto add = [&](std::string rule, const std::string &label, std::string detail) {
    rep.violations.push_back({std::move(rule), label, std::move(detail)});
  };
  if (f.t < 1)
    add("kind", "", "t must be positive");
  std::set<std::string> labels;
  for (const auto &m : f.members) {
    if (!labels.insert(m.label).second)
      add("label", m.label, "duplicate label");
    if (m.parts.empty())
      add("empty", m.label, "member has no intervals");
    if (static_cast<int>(m.parts.size()) > f.t)
      add("kind", m.label, "member has " + std::to_string(m.parts.size()) + " parts, t = " + std::to_string(f.t));
    for (const auto &p : m.parts)
      if (!(p.lo < p.hi))
        add("interval", m.label, "hi <= lo for (" + p.lo.str() + ", " + p.hi.str() + ")");

    if (f.kind == FamilyKind::TTrack) {
      std::set<int> tracks;
      for (const auto &p : m.parts) {
        if (p.track < 1 || p.track > f.t)
          add("track", m.label, "track " + std::to_string(p.track) + " outside 1.." + std::to_string(f.t));
        if (!tracks.insert(p.track).second)
          add("kind", m.label, "two intervals on track " + std::to_string(p.track));
      }
    } else {
      for (const auto &p : m.parts)
        if (p.track != 0)
          add("track", m.label, "t-interval parts must lie on track 0");
      for (std::size_t a = 0; a < m.parts.size(); ++a)
        for (std::size_t b = a + 1; b < m.parts.size(); ++b)
          if (intersects(m.parts[a], m.parts[b]))
            add("disjointness", m.label, "parts " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " overlap");
    }

    if (f.unit)
      for (const auto &p : m.parts)
        if (p.length() != f.unit_length)
          add("unit", m.label, "length " + p.length().str() + " != unit length " + f.unit_length.str());
    if (f.balanced)
      for (const auto &p : m.parts)
        if (p.length() != m.parts.front().length()) {
          add("balanced", m.label, "unequal part lengths");
          break;
        }
  }
  return rep;
}

Graph build_intersection_graph_unchecked(const IntervalFamily &f) {
  Graph g(f.members.size(), f.labels());
  for (std::size_t a = 0; a < f.members.size(); ++a)
    for (std::size_t b = a + 1; b < f.members.size(); ++b) {
      bool hit = false;
      for (const auto &p : f.members[a].parts) {
        for (const auto &q : f.members[b].parts)
          if (intersects(p, q)) {
            hit = true;
            break;
          }
        if (hit)
          break;
      }
      if (hit)
        g.add_edge(a, b);
    }
  return g;
}

Graph build_intersection_graph(const IntervalFamily &f) {
  auto rep = validate_family(f);
  if (!rep.ok())
    throw Error(ErrorKind::InvalidFamily, rep.summary());
  return build_intersection_graph_unchecked(f);
}

bool layout_matches(const IntervalFamily &f, const Graph &expected) {
  if (f.labels() != expected.labels())
    throw Error(ErrorKind::LabelMismatch, "family member labels differ from expected graph labels");
  return build_intersection_graph_unchecked(f) == expected;
}

namespace {

Interval unit_at(int track, const Rational &lo) { return {track, lo, lo + 1}; }

} // namespace

Staircase staircase(std::size_t rows, SameRow same_row, const Rational &anchor, int track) {
  if (rows == 0)
    throw Error(ErrorKind::InvalidArgument, "staircase needs at least one row");
  const Rational eps(1, static_cast<std::int64_t>(4 * rows + 4));
  const std::int64_t shift = same_row == SameRow::Include ? 1 : 3;
  Staircase s;
  s.anchor = anchor;
  s.width = 3;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto ri = static_cast<std::int64_t>(r);
    s.left.push_back(unit_at(track, anchor + eps * (2 * (ri + 1))));
    s.right.push_back(unit_at(track, anchor + 1 + eps * (2 * ri + shift)));
  }
  return s;
}

Interval Staircase::right_hugger() const {
  // Starts where the last left interval ends, so it touches but misses it.
  return unit_at(right.front().track, left.back().hi);
}

Interval Staircase::left_hugger() const { return unit_at(left.front().track, anchor); }

Graph staircase_pattern(std::size_t rows, SameRow same_row) {
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < rows; ++r)
    labels.push_back("L" + std::to_string(r + 1));
  for (std::size_t r = 0; r < rows; ++r)
    labels.push_back("R" + std::to_string(r + 1));
  Graph g(2 * rows, labels);
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = a + 1; b < rows; ++b) {
      g.add_edge(a, b);
      g.add_edge(rows + a, rows + b);
    }
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t s = 0; s < rows; ++s)
      if (same_row == SameRow::Include ? s <= r : s < r)
        g.add_edge(r, rows + s);
  return g;
}

IntervalFamily staircase_family(const Staircase &s) {
  IntervalFamily f;
  f.kind = FamilyKind::TInterval;
  f.t = 1;
  f.unit = true;
  f.unit_length = 1;
  for (std::size_t r = 0; r < s.left.size(); ++r)
    f.members.push_back({"L" + std::to_string(r + 1), {s.left[r]}});
  for (std::size_t r = 0; r < s.right.size(); ++r)
    f.members.push_back({"R" + std::to_string(r + 1), {s.right[r]}});
  for (auto &m : f.members)
    for (auto &p : m.parts)
      p.track = 0;
  return f;
}

std::vector<std::size_t> cycle_complement_positions(std::size_t n) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 1; i <= n; ++i)
    pos.push_back(3 * n + i);
  for (std::size_t j = 1; j <= 3 * n + 1; ++j)
    pos.push_back(j - 1);
  return pos;
}

IntervalFamily cycle_complement_unit2interval(std::size_t n) {
  if (n == 0)
    throw Error(ErrorKind::InvalidArgument, "cycle_complement_unit2interval needs n >= 1");
  const auto len = static_cast<std::int64_t>(2 * n);
  const auto perimeter = static_cast<std::int64_t>(4 * n + 1);
  IntervalFamily f;
  f.kind = FamilyKind::TInterval;
  f.t = 2;
  f.unit = true;
  f.unit_length = len;
  auto pos = cycle_complement_positions(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = static_cast<std::int64_t>(pos[i]);
    f.members.push_back({"a_" + std::to_string(i + 1), {{0, p, p + len}}});
  }
  // The b arcs appear once before and once after the a block, one perimeter apart.
  for (std::size_t j = 0; j < 3 * n + 1; ++j) {
    const auto p = static_cast<std::int64_t>(pos[n + j]);
    f.members.push_back({"b_" + std::to_string(j + 1), {{0, p, p + len}, {0, p + perimeter, p + perimeter + len}}});
  }
  return f;
}

Graph cycle_complement_expected(std::size_t n) {
  auto pos = cycle_complement_positions(n);
  const std::size_t perimeter = 4 * n + 1;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back("a_" + std::to_string(i + 1));
  for (std::size_t j = 0; j < 3 * n + 1; ++j)
    labels.push_back("b_" + std::to_string(j + 1));
  Graph g(perimeter, labels);
  for (std::size_t a = 0; a < perimeter; ++a)
    for (std::size_t b = a + 1; b < perimeter; ++b) {
      const std::size_t diff = (pos[b] + perimeter - pos[a]) % perimeter;
      if (diff != 2 * n && diff != 2 * n + 1)
        g.add_edge(a, b);
    }
  return g;
}

IntervalFamily transformed(const IntervalFamily &f, const Rational &scale, const Rational &offset) {
  if (!(scale > Rational(0)))
    throw Error(ErrorKind::InvalidArgument, "scale must be positive");
  IntervalFamily out = f;
  out.unit_length = f.unit_length * scale;
  for (auto &m : out.members)
    for (auto &p : m.parts) {
      p.lo = p.lo * scale + offset;
      p.hi = p.hi * scale + offset;
    }
  return out;
}

} // namespace mig
