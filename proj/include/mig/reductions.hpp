#pragma once

#include "mig/graph.hpp"
#include "mig/interval.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mig {

/// Target problem a bundle poses. The question is asked on the realized
/// intersection graph (or the plain graph), complemented when `complement` is
/// set and raised to the d-th power for the distance problems.
enum class TargetProblem {
  DominatingSet,
  DistanceDominatingSet,
  PerfectCode,
  DistancePerfectCode,
  CliquePartition,
  SeparatingVertices,
  Irredundant,
};

const char *to_string(TargetProblem p);
TargetProblem target_problem_from_string(const std::string &s);

struct ReductionBundle {
  std::string name;   // registry name of the builder
  TargetProblem problem = TargetProblem::DominatingSet;
  bool complement = false;

  std::optional<IntervalFamily> family; // every builder except the irredundant one
  std::optional<Graph> graph;           // irredundant builder only

  /// k (source), k_prime, and where applicable l_prime, d, n, m.
  std::map<std::string, std::int64_t> params;

  /// Expected intersection graph over member labels (for the plain-graph
  /// bundle this is the graph itself).
  Graph expected;

  /// Named label groups (color classes, pair classes, dummies) used by the
  /// structural checks.
  std::map<std::string, std::vector<std::string>> groups;

  std::string source_digest;

  std::int64_t param(const std::string &key) const;
  bool has_param(const std::string &key) const { return params.count(key) != 0; }

  /// Intersection graph of the family (unchecked), or the plain graph.
  Graph realized() const;
  /// realized(), complemented when the bundle says so.
  Graph question_graph() const;
  std::size_t member_count() const;
};

// Canonical text encodings and their 64-bit FNV-1a digests.
std::string encode_source(const ColoredGraph &cg);
std::string encode_source(const RBInstance &rb);
std::string encode_source(const Graph &g, std::size_t k);
std::string digest(const std::string &text);

/// Complement-domination construction on 3-track intervals.
ReductionBundle reduce_domset_co3track(const ColoredGraph &cg);

struct DomsetProperties {
  std::array<bool, 5> holds{};
  bool all() const { return holds[0] && holds[1] && holds[2] && holds[3] && holds[4]; }
};

/// Scans the realized intersection graph for the five structural properties.
/// Throws WrongBundleKind for bundles of other builders.
DomsetProperties check_domset_properties(const ReductionBundle &b);

struct VariantFlags {
  bool connected = false;
  bool clique = false;
  bool independent = false;
};

/// Evaluates the dominating-set variant predicates of `witness` (member labels)
/// in the complement of the realized graph.
VariantFlags domset_variant_checks(const ReductionBundle &b, const std::vector<std::string> &witness);

/// Unit 2-track construction for d-distance domination, d >= 2.
ReductionBundle reduce_dist_domset_unit2track(const RBInstance &rb, std::size_t d);

/// Single-line 3-interval construction for 2-distance domination in the
/// complement.
ReductionBundle reduce_dist_domset_co3interval(const RBInstance &rb);

/// Unit 2-track perfect code construction (staircase gadgets).
ReductionBundle reduce_perfectcode_unit2track(const ColoredGraph &cg);

/// Unit 2-track d-distance perfect code construction, d >= 2.
ReductionBundle reduce_dist_perfectcode_unit2track(const ColoredGraph &cg, std::size_t d);

/// Unit 2-interval clique partition construction from complemented odd cycles.
ReductionBundle reduce_cliquepartition_unit2interval(const ColoredGraph &cg);

/// Balanced 2-track separating-vertices construction from k-clique.
ReductionBundle reduce_sep_balanced2track(const Graph &g, std::size_t k);

/// Balanced 3-track construction; the separation question is posed on the
/// complement.
ReductionBundle reduce_sep_cobal3track(const Graph &g, std::size_t k);

enum class CutVariant { Connected, Components };

struct CutParams {
  std::int64_t k = 0;
  std::int64_t l = 0;
};

/// Parameters for the cutting variants on a separating-vertices bundle.
CutParams derive_cutting_params(const ReductionBundle &b, CutVariant variant);

/// Plain-graph construction for irredundant sets in the complement.
ReductionBundle reduce_irredundant(const ColoredGraph &cg);

/// Names accepted by reduce_by_name / verify: domset_co3track,
/// dist_domset_unit2track, dist_domset_co3interval, perfectcode_unit2track,
/// dist_perfectcode_unit2track, cliquepartition_unit2interval,
/// sep_balanced2track, sep_cobal3track, irredundant.
const std::vector<std::string> &reduction_names();

/// Source kind a builder consumes: "colored", "rb" or "graph".
std::string reduction_source_kind(const std::string &name);

} // namespace mig
