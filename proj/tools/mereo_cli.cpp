// mereo: command-line front end for the finite mereotopology library.
//
// Exit status: 0 when every executed check passes, 1 when some check fails,
// 2 on malformed input, usage errors and exceeded caps.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "mereo/axioms.hpp"
#include "mereo/campaign.hpp"
#include "mereo/eca.hpp"
#include "mereo/example1.hpp"
#include "mereo/frames.hpp"
#include "mereo/json_io.hpp"
#include "mereo/representations.hpp"
#include "mereo/topology.hpp"

namespace {

using namespace mereo;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;
  bool verbose = false;
  std::optional<std::size_t> cap_elements;
  std::optional<std::size_t> cap_worlds;
  std::string input;
  std::string kind = "type2";
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  std::size_t max_universe = 5;
};

Caps caps_of(const Options& o) {
  Caps c;
  if (o.cap_elements || o.cap_worlds) {
    std::cerr << "warning: caps overridden; exhaustive checks may run much longer\n";
  }
  if (o.cap_elements) c.max_elements = *o.cap_elements;
  if (o.cap_worlds) c.max_worlds = *o.cap_worlds;
  return c;
}

Json load_input(const Options& o) {
  if (o.input.empty()) throw InvalidArgument("this command needs --input FILE");
  return read_json_file(o.input);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

void print_checks(const std::string& title, const Report& r, const ElementRenderer& render = {}) {
  std::cout << title << "\n";
  for (const Verdict& v : r.verdicts) {
    std::cout << "  " << pass_fail(v.pass) << "  " << v.name;
    if (!v.pass) {
      std::cout << "  witness (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << (render ? render(v.witness[i]).dump() : std::to_string(v.witness[i]));
      }
      std::cout << ")";
    }
    std::cout << "\n";
  }
}

int cmd_rc(const Options& o) {
  const Caps caps = caps_of(o);
  const LabeledSpace space = parse_topology(load_input(o), caps);
  const RegularClosedAlgebra alg(space.topology);
  require_cap(alg.carrier().size(), caps.max_elements, "regular closed carrier size");
  const auto& carrier = alg.carrier();

  Json elems = Json::array();
  for (const PointSet& a : carrier) {
    elems.push_back(Json{{"set", labels_json(space, a)},
                         {"complement", labels_json(space, alg.complement(a))},
                         {"internally_connected", rc_internally_connected(alg, a)}});
  }
  Json atoms = Json::array();
  for (std::size_t i = 0; i < alg.atom_count(); ++i) atoms.push_back(labels_json(space, alg.atom(i)));

  if (o.json) {
    Json out{{"universe", space.labels},
             {"opens", space.topology.opens().size()},
             {"carrier_size", carrier.size()},
             {"atoms", atoms},
             {"carrier", elems}};
    if (o.verbose) {
      Json contact = Json::array();
      Json covering = Json::array();
      for (std::size_t i = 0; i < carrier.size(); ++i) {
        for (std::size_t j = 0; j < carrier.size(); ++j) {
          if (rc_contact(alg, carrier[i], carrier[j])) contact.push_back(Json::array({i, j}));
          for (std::size_t k = 0; k < carrier.size(); ++k) {
            if (rc_covering(alg, carrier[i], carrier[j], carrier[k])) covering.push_back(Json::array({i, j, k}));
          }
        }
      }
      out["contact"] = contact;
      out["covering"] = covering;
    }
    std::cout << out.dump(2) << "\n";
    return kPass;
  }

  std::cout << "points: " << space.labels.size() << ", opens: " << space.topology.opens().size()
            << ", regular closed sets: " << carrier.size() << ", atoms: " << alg.atom_count() << "\n";
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    std::cout << "  [" << i << "] " << space.render(carrier[i]) << "  complement " << space.render(alg.complement(carrier[i]))
              << "  internally connected: " << yes_no(elems[i]["internally_connected"].get<bool>()) << "\n";
  }
  if (o.verbose) {
    std::cout << "contact (carrier indices):\n";
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      std::cout << "  [" << i << "]:";
      for (std::size_t j = 0; j < carrier.size(); ++j) {
        if (rc_contact(alg, carrier[i], carrier[j])) std::cout << " " << j;
      }
      std::cout << "\n";
    }
  }
  return kPass;
}

int cmd_check_axioms(const Options& o) {
  const Caps caps = caps_of(o);
  const Json doc = load_input(o);
  std::optional<CoveringRelation> cov;
  std::string source;
  ElementRenderer render;
  std::optional<LabeledSpace> space;
  std::optional<RegularClosedAlgebra> alg;

  switch (detect_kind(doc)) {
    case DocumentKind::topology: {
      source = "topology";
      space = parse_topology(doc, caps);
      alg.emplace(space->topology);
      cov = eca_from_rc(*alg, caps).covering();
      render = region_renderer(*space, *alg);
      break;
    }
    case DocumentKind::eca:
      source = "eca";
      cov = parse_covering(doc);
      break;
    case DocumentKind::frame: {
      source = "frame";
      const Frame f = parse_frame(doc);
      const std::size_t n = world_count(f);
      require_cap(n, caps.max_powerset_worlds, "worlds for a powerset algebra");
      const FiniteBooleanAlgebra ba(static_cast<unsigned>(n));
      cov = CoveringRelation::from_predicate(
          ba, [&](Element a, Element b, Element d) { return powerset_covering(f, {n, a}, {n, b}, {n, d}, caps); });
      break;
    }
  }

  const Report eca = check_eca(*cov, caps);
  const Report weca = check_weca(*cov, caps);
  Json suites{{"eca", checks_json(eca, render)}, {"weca", checks_json(weca, render)}};
  std::string strength = "none";
  bool ok = eca.all_pass() && weca.all_pass();
  std::optional<Report> ca, relative, consequences;
  if (weca.all_pass()) {
    const auto e = ExtendedContactAlgebra::classify(*cov, caps);
    strength = to_string(e.strength());
    consequences = check_weca_consequences(e, caps);
    suites["weca_consequences"] = checks_json(*consequences, render);
    ok = ok && consequences->all_pass();
    if (e.strength() == Strength::eca) {
      ca = check_ca(derived_contact(e), caps);
      relative = check_relative_contact(e, caps);
      suites["ca"] = checks_json(*ca, render);
      suites["relative_contact"] = checks_json(*relative, render);
      ok = ok && ca->all_pass() && relative->all_pass();
    }
  }

  if (o.json) {
    std::cout << Json{{"source", source},
                      {"atoms", cov->algebra().atom_count()},
                      {"strength", strength},
                      {"pass", ok},
                      {"suites", suites}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "source: " << source << ", atoms: " << cov->algebra().atom_count() << ", strength: " << strength << "\n";
    print_checks("ECA axioms", eca, render);
    print_checks("WECA axioms", weca, render);
    if (consequences) print_checks("WECA consequences", *consequences, render);
    if (ca) print_checks("derived contact (CA axioms)", *ca, render);
    if (relative) print_checks("relative contact", *relative, render);
  }
  return ok ? kPass : kFail;
}

int cmd_represent(const Options& o) {
  const Caps caps = caps_of(o);
  const Json doc = load_input(o);
  const DocumentKind kind = detect_kind(doc);
  if (kind == DocumentKind::frame) throw InvalidArgument("represent takes a topology or ECA document, not a frame");

  if (o.kind == "parametrized") {
    std::optional<LabeledSpace> space;
    std::optional<RegularClosedAlgebra> alg;
    std::optional<ExtendedContactAlgebra> e;
    if (kind == DocumentKind::topology) {
      space = parse_topology(doc, caps);
      alg.emplace(space->topology);
      e = eca_from_rc(*alg, caps);
    } else {
      e = ExtendedContactAlgebra::classify(parse_covering(doc), caps);
    }
    const ParametrizedRepresentation rep = build_parametrized_frame(*e, caps);
    const Report checks = verify_representation(rep, caps);
    Json out = representation_json(rep, checks);
    out["source_strength"] = to_string(e->strength());
    std::optional<Report> frame_eca;
    if (rep.frame.world_count() <= caps.max_powerset_worlds) {
      const FiniteBooleanAlgebra ba(static_cast<unsigned>(rep.frame.world_count()));
      const auto cov = target_covering(rep);
      frame_eca = check_eca(CoveringRelation::from_predicate(ba, [&](Element a, Element b, Element d) { return cov(a, b, d); }),
                            caps);
      out["frame_algebra_eca"] = checks_json(*frame_eca);
    }
    if (o.json) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "pipeline: parametrized, worlds: " << rep.frame.world_count()
                << ", source: " << to_string(e->strength()) << "\n";
      print_checks("embedding", checks);
      if (frame_eca) print_checks("frame algebra against ECA axioms (informational)", *frame_eca);
    }
    return checks.all_pass() ? kPass : kFail;
  }

  if (o.kind != "type1" && o.kind != "type2") throw InvalidArgument("--kind must be parametrized, type1 or type2");
  if (kind != DocumentKind::topology) {
    throw InvalidArgument(
        "the " + o.kind +
        " construction needs a topological model of the algebra; no construction of one from an abstract "
        "extended contact algebra is available, so supply a topology document instead");
  }
  const LabeledSpace space = parse_topology(doc, caps);
  const RegularClosedAlgebra alg(space.topology);
  Report checks;
  Json out;
  std::size_t worlds = 0;
  if (o.kind == "type1") {
    const Type1Representation rep = build_type1(alg, caps);
    checks = verify_representation(rep, caps);
    out = representation_json(space, rep, checks);
    worlds = rep.frame.world_count();
  } else {
    const Type2Representation rep = build_type2(alg, caps);
    checks = verify_representation(rep, caps);
    out = representation_json(space, rep, checks);
    worlds = rep.frame.world_count();
  }
  if (o.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "pipeline: " << o.kind << ", worlds: " << worlds << ", regular closed sets: " << alg.carrier().size()
              << "\n";
    print_checks("embedding", checks, region_renderer(space, alg));
  }
  return checks.all_pass() ? kPass : kFail;
}

int cmd_example1(const Options& o) {
  const Example1Result r = run_example1();
  const bool covering_agrees =
      r.connected_x_from_covering == r.connected_x && r.connected_x_prime_from_covering == r.connected_x_prime;
  const bool ok = r.non_definability_witnessed() && covering_agrees;

  if (o.json) {
    Json corr = Json::array();
    for (const auto& [a, b] : r.correspondence) {
      corr.push_back(Json{{"x", labels_json(r.x, a)}, {"x_prime", labels_json(r.x_prime, b)}});
    }
    Json out{{"carrier_size_x", r.carrier_size_x},
             {"carrier_size_x_prime", r.carrier_size_x_prime},
             {"bijective", r.bijective},
             {"preserves_zero", r.preserves_zero},
             {"preserves_complement", r.preserves_complement},
             {"preserves_join", r.preserves_join},
             {"preserves_contact", r.preserves_contact},
             {"isomorphism", r.isomorphism()},
             {"region_x", labels_json(r.x, r.region_x)},
             {"internally_connected_x", r.connected_x},
             {"region_x_prime", labels_json(r.x_prime, r.region_x_prime)},
             {"internally_connected_x_prime", r.connected_x_prime},
             {"covering_characterization_agrees", covering_agrees},
             {"non_definability_witnessed", r.non_definability_witnessed()},
             {"correspondence", corr}};
    if (o.verbose) out["contact_diff"] = r.contact_diff;
    std::cout << out.dump(2) << "\n";
    return ok ? kPass : kFail;
  }

  std::cout << "X  = {1,...,7}, subbasis {1,2,3} {2,5,7} {3,6,7}: " << r.carrier_size_x << " regular closed sets\n"
            << "X' = {2,...,7}, subbasis {2,3} {2,5,7} {3,6,7}: " << r.carrier_size_x_prime << " regular closed sets\n"
            << "f(A) = A minus {1}\n";
  for (const auto& [a, b] : r.correspondence) std::cout << "  " << r.x.render(a) << " -> " << r.x_prime.render(b) << "\n";
  std::cout << "bijective: " << yes_no(r.bijective) << "; preserves 0: " << yes_no(r.preserves_zero)
            << ", complement: " << yes_no(r.preserves_complement) << ", join: " << yes_no(r.preserves_join)
            << ", contact: " << yes_no(r.preserves_contact) << "\n";
  if (o.verbose) {
    std::cout << "contact table differences: " << r.contact_diff.size() << "\n";
    for (auto [i, j] : r.contact_diff) std::cout << "  " << r.x.render(r.correspondence[i].first) << " vs "
                                                 << r.x.render(r.correspondence[j].first) << "\n";
  }
  std::cout << "internally connected in X:  " << r.x.render(r.region_x) << " = " << std::boolalpha << r.connected_x << "\n"
            << "internally connected in X': " << r.x_prime.render(r.region_x_prime) << " = " << r.connected_x_prime
            << "\n"
            << "covering-based characterization agrees: " << yes_no(covering_agrees) << "\n";
  if (ok) {
    std::cout << "isomorphism verified; internal connectedness differs; non-definability from contact witnessed\n";
  } else {
    std::cout << "example did not reproduce\n";
  }
  return ok ? kPass : kFail;
}

int cmd_random(const Options& o) {
  CampaignConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.max_universe = o.max_universe;
  cfg.caps = caps_of(o);
  const CampaignReport rep = run_campaign(cfg);
  if (o.json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    std::cout << "seed " << cfg.seed << ", trials " << rep.trials.size() << ", max universe " << cfg.max_universe
              << ": " << rep.passed() << " passed, " << rep.failed() << " failed\n";
    for (const auto& t : rep.trials) {
      if (o.verbose || !t.pass()) {
        std::cout << "  trial " << t.index << ": n=" << t.input.universe_size << " opens=" << t.opens
                  << " carrier=" << t.carrier_size << " worlds=" << t.worlds << " " << pass_fail(t.pass());
        if (!t.error.empty()) std::cout << " (" << t.error << ")";
        std::cout << "\n";
        for (const Verdict& v : t.report.verdicts) {
          if (!v.pass) std::cout << "    FAIL " << v.name << "\n";
        }
      }
    }
    if (auto first = rep.first_counterexample()) std::cout << "first counterexample: trial " << *first << "\n";
  }
  return rep.failed() == 0 ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite mereotopology: regular closed algebras, contact axioms and relational representations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_flag("--verbose", o.verbose, "Print full tables");
  app.add_option("--cap-elements", o.cap_elements, "Largest carrier swept exhaustively (default 64)");
  app.add_option("--cap-worlds", o.cap_worlds, "Largest frame world set (default 64)");
  app.add_option("--input", o.input, "Input JSON document");

  auto* rc = app.add_subcommand("rc", "Regular closed algebra of a topology document");
  auto* check = app.add_subcommand("check-axioms", "Axiom report for an ECA, topology or frame document");
  auto* represent = app.add_subcommand("represent", "Build a relational representation and verify the embedding");
  represent->add_option("--kind", o.kind, "parametrized, type1 or type2")
      ->check(CLI::IsMember({"parametrized", "type1", "type2"}));
  auto* ex1 = app.add_subcommand("example1", "Two spaces with isomorphic contact algebras but different c°");
  auto* random = app.add_subcommand("random", "Seeded random campaign over small topologies");
  random->add_option("--seed", o.seed, "Random seed");
  random->add_option("--trials", o.trials, "Number of topologies");
  random->add_option("--max-universe", o.max_universe, "Largest universe size")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*rc) return cmd_rc(o);
    if (*check) return cmd_check_axioms(o);
    if (*represent) return cmd_represent(o);
    if (*ex1) return cmd_example1(o);
    if (*random) return cmd_random(o);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AxiomViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
