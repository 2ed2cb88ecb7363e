#pragma once

#include "mig/io.hpp"
#include "mig/reductions.hpp"
#include "mig/solvers.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mig {

struct TrialRecord {
  std::uint64_t seed = 0;
  std::string origin; // "anchored:<name>" or "planted:<yes|no|random>"
  std::string source_digest;
  std::map<std::string, std::int64_t> params;
  std::string source_status;
  std::string target_status;
  bool source_answer = false;
  bool target_answer = false;
  bool agree = false;
  std::map<std::string, bool> checks;
  std::map<std::string, std::int64_t> counts;
  std::string error; // builder or oracle failure
  double source_ms = 0;
  double target_ms = 0;

  bool passed() const;
};

struct VerifyOptions {
  std::size_t trials = 25;
  std::uint64_t seed = 1;
  std::optional<std::size_t> d; // distance reductions; alternates 2 and 3 when unset
  bool anchored = true;
  SolveLimits limits;
};

struct VerifyReport {
  std::string name;
  std::vector<TrialRecord> trials;

  bool pass() const;
  std::size_t agreeing() const;
  std::size_t exhausted() const;
  std::size_t failed_checks() const;
};

/// Builder names plus the four cutting variants
/// cut_{connected,components}_{balanced2track,cobal3track}.
const std::vector<std::string> &verify_names();

/// Anchored trials first, then `trials` randomized trials with seeds
/// seed, seed+1, ... mixing planted yes, no and random sources.
VerifyReport verify_reduction(const std::string &name, const VerifyOptions &opt = {});

/// Timings are left out unless requested so reports stay byte-identical.
Json to_json(const VerifyReport &r, bool with_timings = false);

// Fixed instances.
ColoredGraph sample_colored_instance();
/// Sample colored instance without edge e_r (1-based).
ColoredGraph sample_colored_without(std::size_t r);
const std::vector<std::string> &sample_witness_labels();
RBInstance sample_rb_instance();

struct FuzzReport {
  std::size_t effective = 0;
  std::size_t discarded = 0; // mutations that left the family valid and the graph unchanged
  std::size_t detected = 0;
  std::size_t detected_by_properties = 0;
  std::size_t invalid = 0;
  std::vector<std::string> mutations;

  double detection_rate() const { return effective ? double(detected) / double(effective) : 1.0; }
};

/// Shifts single interval endpoints of a complement-domination bundle by +2
/// until `count` mutations change the family; each is detected when it breaks
/// validity, layout_matches or one of the five properties.
FuzzReport domset_fuzz(const ReductionBundle &b, std::uint64_t seed, std::size_t count = 20);

} // namespace mig
