#pragma once

#include "mig/generators.hpp"
#include "mig/io.hpp"
#include "mig/reductions.hpp"
#include "mig/render.hpp"
#include "mig/solvers.hpp"
#include "mig/verify.hpp"

#include <optional>
#include <string>

namespace mig {

// Document-level operations shared by migtool and the python module.

struct GenRequest {
  std::string kind = "colored"; // colored or rb
  std::size_t n = 4;            // reds for rb
  std::size_t k = 2;
  std::size_t blues = 0;
  double p = 0.5;
  Planted planted = Planted::Random;
  std::uint64_t seed = 1;
};

Json generate_document(const GenRequest &req);

/// Builds the named reduction from a colored, rb or graph document. `d` is
/// required by the distance builders; `k` overrides the clique size of graph
/// sources (a colored document used as a graph source supplies its own k).
ReductionBundle reduce_by_name(const std::string &name, const Json &source, std::optional<std::size_t> d = {},
                               std::optional<std::size_t> k = {});

struct SolveRequest {
  std::string problem;
  std::size_t k = 0;
  std::optional<std::size_t> l;
  std::optional<std::size_t> d;
  DomVariant variant = DomVariant::Plain;
  bool exact = false;
  bool complement = false;
  SolveLimits limits;
};

/// Problem names accepted by solve_document.
const std::vector<std::string> &solve_problem_names();

/// Graph a solve request runs on: a family's intersection graph, a bundle's
/// question graph, or the graph itself; complemented once more on request.
Graph question_graph_of(const Json &doc, bool complement);

/// Runs one oracle on a document and reports the answer with witness labels.
Json solve_document(const SolveRequest &req, const Json &doc);

/// Renders a family document or the family carried by a bundle document.
std::string render_document(const Json &doc, RenderFormat format, int density = 0);

} // namespace mig
