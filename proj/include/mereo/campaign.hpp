#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mereo/caps.hpp"
#include "mereo/json_io.hpp"
#include "mereo/point_set.hpp"
#include "mereo/report.hpp"

namespace mereo {

struct CampaignConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  std::size_t max_universe = 5;
  Caps caps;
};

struct TrialInput {
  std::size_t universe_size = 0;
  std::vector<PointSet> subbasis;
};

/// Draws every trial's topology up front from one mt19937_64 stream, so the
/// inputs depend on the seed alone. Universe size is 1 + r % max_universe;
/// the candidate pool is every subset of 1 to 3 points followed by two
/// uniform random subsets, and each candidate is kept when the next draw is odd.
std::vector<TrialInput> sample_trials(const CampaignConfig& config);

struct TrialResult {
  std::size_t index = 0;
  TrialInput input;
  std::size_t opens = 0;
  std::size_t carrier_size = 0;
  std::size_t atoms = 0;
  std::size_t worlds = 0;
  /// Verdict names are prefixed by suite: eca., ca., relative_contact.,
  /// weca_consequences., type1., type2.
  Report report;
  /// Set when the suite could not run to completion (e.g. a cap was hit).
  std::string error;

  bool pass() const { return error.empty() && report.all_pass(); }
};

/// Topology, eca_from_rc, ECA and CA axioms, relative contact items, WECA
/// consequences, and the type-1 and type-2 pipelines.
TrialResult run_trial(std::size_t index, const TrialInput& input, const Caps& caps = {});

struct CampaignReport {
  CampaignConfig config;
  std::vector<TrialResult> trials;

  std::size_t passed() const;
  std::size_t failed() const { return trials.size() - passed(); }
  std::optional<std::size_t> first_counterexample() const;
  /// Byte-stable for a given config.
  Json to_json() const;
};

/// Trials run in parallel; results are stored by trial index.
CampaignReport run_campaign(const CampaignConfig& config);

}  // namespace mereo
