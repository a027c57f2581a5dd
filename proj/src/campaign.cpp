#include "mereo/campaign.hpp"

#include <random>

#include "mereo/axioms.hpp"
#include "mereo/eca.hpp"
#include "mereo/representations.hpp"
#include "mereo/topology.hpp"

namespace mereo {

std::vector<TrialInput> sample_trials(const CampaignConfig& config) {
  if (config.max_universe == 0 || config.max_universe > kMaxUniverse) {
    throw InvalidArgument("max universe must be between 1 and 64");
  }
  require_cap(config.max_universe, config.caps.max_oracle_universe, "campaign universe size");
  // Raw engine output only: distributions are implementation-defined, the engine is not.
  std::mt19937_64 rng(config.seed);
  std::vector<TrialInput> out;
  out.reserve(config.trials);
  for (std::size_t t = 0; t < config.trials; ++t) {
    TrialInput in;
    in.universe_size = 1 + static_cast<std::size_t>(rng() % config.max_universe);
    const std::size_t n = in.universe_size;
    std::vector<std::uint64_t> pool;
    for (std::uint64_t s = 1; s <= full_mask(n); ++s) {
      if (std::popcount(s) <= 3) pool.push_back(s);
    }
    pool.push_back(rng() & full_mask(n));
    pool.push_back(rng() & full_mask(n));
    for (std::uint64_t s : pool) {
      if (rng() & 1U) in.subbasis.emplace_back(n, s);
    }
    out.push_back(std::move(in));
  }
  return out;
}

namespace {

void append(Report& into, const std::string& prefix, const Report& from) {
  for (Verdict v : from.verdicts) {
    v.name = prefix + v.name;
    into.verdicts.push_back(std::move(v));
  }
}

}  // namespace

TrialResult run_trial(std::size_t index, const TrialInput& input, const Caps& caps) {
  TrialResult r;
  r.index = index;
  r.input = input;
  try {
    const FiniteTopology t = generate_topology(input.universe_size, input.subbasis, caps);
    r.opens = t.opens().size();
    const RegularClosedAlgebra alg(t);
    r.carrier_size = alg.carrier().size();
    r.atoms = alg.atom_count();
    ExtendedContactAlgebra e = [&] {
      try {
        return eca_from_rc(alg, caps);
      } catch (const AxiomViolation& v) {
        append(r.report, "eca.", v.report());
        throw;
      }
    }();
    append(r.report, "eca.", check_eca(e.covering(), caps));
    append(r.report, "ca.", check_ca(derived_contact(e), caps));
    append(r.report, "relative_contact.", check_relative_contact(e, caps));
    append(r.report, "weca_consequences.", check_weca_consequences(e, caps));
    const Type1Representation t1 = build_type1(alg, caps);
    r.worlds = t1.frame.world_count();
    append(r.report, "type1.", verify_representation(t1, caps));
    append(r.report, "type2.", verify_representation(build_type2(alg, caps), caps));
  } catch (const Error& ex) {
    r.error = ex.what();
  }
  return r;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  const std::vector<TrialInput> inputs = sample_trials(config);
  CampaignReport rep{config, std::vector<TrialResult>(inputs.size())};
  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    rep.trials[idx] = run_trial(idx, inputs[idx], config.caps);
  }
  return rep;
}

std::size_t CampaignReport::passed() const {
  std::size_t n = 0;
  for (const auto& t : trials) n += t.pass() ? 1 : 0;
  return n;
}

std::optional<std::size_t> CampaignReport::first_counterexample() const {
  for (const auto& t : trials) {
    if (!t.pass()) return t.index;
  }
  return std::nullopt;
}

namespace {

Json subbasis_json(const TrialInput& in) {
  Json out = Json::array();
  for (const PointSet& s : in.subbasis) out.push_back(s.members());
  return out;
}

Json trial_json(const TrialResult& t) {
  Json checks = Json::object();
  for (const Verdict& v : t.report.verdicts) checks[v.name] = v.pass;
  Json j{{"trial", t.index},
         {"universe_size", t.input.universe_size},
         {"subbasis", subbasis_json(t.input)},
         {"opens", t.opens},
         {"carrier_size", t.carrier_size},
         {"atoms", t.atoms},
         {"worlds", t.worlds},
         {"pass", t.pass()},
         {"checks", checks}};
  if (!t.error.empty()) j["error"] = t.error;
  return j;
}

}  // namespace

Json CampaignReport::to_json() const {
  // Per-check tallies in first-seen order.
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> tally;
  for (const auto& t : trials) {
    for (const Verdict& v : t.report.verdicts) {
      std::size_t i = 0;
      while (i < names.size() && names[i] != v.name) ++i;
      if (i == names.size()) {
        names.push_back(v.name);
        tally.emplace_back(0, 0);
      }
      (v.pass ? tally[i].first : tally[i].second) += 1;
    }
  }
  Json per_check = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i) {
    per_check[names[i]] = Json{{"pass", tally[i].first}, {"fail", tally[i].second}};
  }
  Json per_trial = Json::array();
  for (const auto& t : trials) per_trial.push_back(trial_json(t));
  const auto first = first_counterexample();
  return Json{{"seed", config.seed},
              {"trials", trials.size()},
              {"max_universe", config.max_universe},
              {"passed", passed()},
              {"failed", failed()},
              {"per_check", per_check},
              {"first_counterexample", first ? trial_json(trials[*first]) : Json(nullptr)},
              {"results", per_trial}};
}

}  // namespace mereo
