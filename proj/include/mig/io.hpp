#pragma once

#include "mig/graph.hpp"
#include "mig/interval.hpp"
#include "mig/reductions.hpp"

#include "json.hpp"

#include <string>

namespace mig {

using Json = nlohmann::ordered_json;

// Every document carries a "type" field: graph, colored, rb, family, bundle.
Json to_json(const Graph &g);
Json to_json(const ColoredGraph &cg);
Json to_json(const RBInstance &rb);
Json to_json(const IntervalFamily &f);
Json to_json(const ReductionBundle &b);

Graph graph_from_json(const Json &j);
ColoredGraph colored_from_json(const Json &j);
RBInstance rb_from_json(const Json &j);
IntervalFamily family_from_json(const Json &j);
ReductionBundle bundle_from_json(const Json &j);

/// Value of the "type" field; throws Parse when it is missing.
std::string document_type(const Json &j);

Rational parse_rational(const std::string &s);

/// Parses text; syntax errors become Parse errors carrying line and column.
Json parse_json_text(const std::string &text, const std::string &origin = "<input>");
Json read_json_file(const std::string &path);
/// Two-space indentation and a trailing newline.
std::string dump_json(const Json &j);
void write_text_file(const std::string &path, const std::string &text);

} // namespace mig
