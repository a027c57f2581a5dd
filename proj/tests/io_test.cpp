#include <gtest/gtest.h>

#include "mereo/campaign.hpp"
#include "mereo/error.hpp"
#include "mereo/example1.hpp"
#include "mereo/json_io.hpp"
#include "mereo/labeled.hpp"
#include "mereo/representations.hpp"

using namespace mereo;

TEST(Labeled, RoundTripsLabels) {
  const auto s = make_labeled_space({"a", "b", "c"}, {{"a", "b"}, {"c"}});
  EXPECT_EQ(s.index_of("c"), 2U);
  EXPECT_EQ(s.render(s.set_of({"c", "a"})), "{a,c}");
  EXPECT_EQ(s.labels_of(s.set_of({"b"})), (std::vector<std::string>{"b"}));
  EXPECT_THROW(s.index_of("z"), InvalidArgument);
  EXPECT_THROW(make_labeled_space({"a", "a"}, {}), InvalidArgument);
  EXPECT_THROW(make_labeled_space({}, {}), InvalidArgument);
  EXPECT_THROW(make_labeled_space({"a"}, {{"b"}}), InvalidArgument);
}

TEST(Json, ParseErrorsCarryLocation) {
  try {
    parse_json_text("{\n  \"universe\": [1,\n}");
    FAIL() << "expected parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST(Json, DetectsDocumentKinds) {
  EXPECT_EQ(detect_kind(parse_json_text(R"({"universe": [1], "subbasis": []})")), DocumentKind::topology);
  EXPECT_EQ(detect_kind(parse_json_text(R"({"atoms": 1, "covering": []})")), DocumentKind::eca);
  EXPECT_EQ(detect_kind(parse_json_text(R"({"worlds": 1, "classes": [0]})")), DocumentKind::frame);
  EXPECT_THROW(detect_kind(parse_json_text(R"({"other": 1})")), ParseError);
}

TEST(Json, ParsesTopologyWithMixedLabels) {
  const auto s = parse_topology(parse_json_text(R"({"universe": [1, "x", 3], "subbasis": [[1, "x"], [3]]})"));
  EXPECT_EQ(s.labels, (std::vector<std::string>{"1", "x", "3"}));
  EXPECT_EQ(s.topology.opens().size(), 4U);
}

TEST(Json, UnknownLabelNamesThePointer) {
  try {
    parse_topology(parse_json_text(R"({"universe": [1, 2], "subbasis": [[1, 9]]})"));
    FAIL() << "expected parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("/subbasis/0/1"), std::string::npos) << e.what();
  }
}

TEST(Json, ParsesCoverings) {
  const auto d = parse_covering(parse_json_text(R"({"atoms": 2, "covering_mode": "discrete"})"));
  EXPECT_EQ(d, CoveringRelation::discrete(FiniteBooleanAlgebra(2)));
  const auto t = parse_covering(parse_json_text(R"({"atoms": 1, "covering": [[0, 1, 0], [1, 1, 1]]})"));
  EXPECT_TRUE(t.covers(0, 1, 0));
  EXPECT_TRUE(t.covers(1, 1, 1));
  EXPECT_FALSE(t.covers(1, 1, 0));
  EXPECT_THROW(parse_covering(parse_json_text(R"({"atoms": 1, "covering": [[0, 2, 0]]})")), ParseError);
  EXPECT_THROW(parse_covering(parse_json_text(R"({"atoms": 0, "covering": []})")), ParseError);
  EXPECT_THROW(parse_covering(parse_json_text(R"({"atoms": 1, "covering_mode": "other"})")), ParseError);
}

TEST(Json, ParsesFrames) {
  const Frame f1 = parse_frame(parse_json_text(R"({"worlds": 3, "classes": [0, 0, 1]})"));
  ASSERT_TRUE(std::holds_alternative<EquivalenceFrame1>(f1));
  const Frame f2 = parse_frame(parse_json_text(R"({"worlds": 3, "classes": [0, 0, 1], "classes2": [0, 1, 1]})"));
  ASSERT_TRUE(std::holds_alternative<EquivalenceFrame2>(f2));
  EXPECT_EQ(world_count(f2), 3U);
  EXPECT_THROW(parse_frame(parse_json_text(R"({"worlds": 2, "classes": [0]})")), ParseError);
}

TEST(Json, ChecksRenderWitnesses) {
  Report r;
  r.verdicts.push_back({"ok", true, {}});
  r.verdicts.push_back({"bad", false, {1, 2}});
  const auto j = checks_json(r, [](std::uint64_t x) { return Json("e" + std::to_string(x)); });
  EXPECT_EQ(j.dump(), R"([{"name":"ok","pass":true,"witness":null},{"name":"bad","pass":false,"witness":["e1","e2"]}])");
}

TEST(Json, RepresentationDocumentShape) {
  const auto space = make_labeled_space({"1", "2"}, {{"1"}, {"2"}});
  const RegularClosedAlgebra alg(space.topology);
  const auto rep = build_type2(alg);
  const auto j = representation_json(space, rep, verify_representation(rep));
  EXPECT_EQ(j["pipeline"], "type2");
  EXPECT_TRUE(j.contains("checks"));
  EXPECT_TRUE(j.contains("frame"));
  EXPECT_EQ(j["embedding"]["{1,2}"].size(), 2U);
}

TEST(Example1, LibraryResult) {
  const auto r = run_example1();
  EXPECT_EQ(r.carrier_size_x, r.carrier_size_x_prime);
  EXPECT_EQ(r.correspondence.size(), r.carrier_size_x);
  EXPECT_TRUE(r.isomorphism());
  EXPECT_TRUE(r.contact_diff.empty());
  EXPECT_EQ(r.x.render(r.region_x), "{1,2,3,4,5,6}");
  EXPECT_EQ(r.x_prime.render(r.region_x_prime), "{2,3,4,5,6}");
  EXPECT_TRUE(r.connected_x);
  EXPECT_FALSE(r.connected_x_prime);
  EXPECT_EQ(r.connected_x_from_covering, r.connected_x);
  EXPECT_EQ(r.connected_x_prime_from_covering, r.connected_x_prime);
  EXPECT_TRUE(r.non_definability_witnessed());
}

TEST(Campaign, SamplerIsSeedDriven) {
  CampaignConfig c;
  c.seed = 77;
  c.trials = 20;
  const auto a = sample_trials(c);
  const auto b = sample_trials(c);
  ASSERT_EQ(a.size(), 20U);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].universe_size, b[i].universe_size);
    EXPECT_EQ(a[i].subbasis, b[i].subbasis);
    EXPECT_GE(a[i].universe_size, 1U);
    EXPECT_LE(a[i].universe_size, 5U);
  }
  c.seed = 78;
  bool differs = false;
  const auto d = sample_trials(c);
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].subbasis != d[i].subbasis;
  EXPECT_TRUE(differs);
}

TEST(Campaign, ReportIsByteStableAndConsistent) {
  CampaignConfig c;
  c.seed = 5;
  c.trials = 12;
  const auto r1 = run_campaign(c);
  const auto r2 = run_campaign(c);
  EXPECT_EQ(r1.to_json().dump(), r2.to_json().dump());
  EXPECT_EQ(r1.passed() + r1.failed(), 12U);
  EXPECT_EQ(r1.failed(), 0U);
  const auto j = r1.to_json();
  for (const auto& [name, tally] : j["per_check"].items()) {
    EXPECT_EQ(tally["pass"].get<std::size_t>() + tally["fail"].get<std::size_t>(), 12U) << name;
  }
  EXPECT_TRUE(j["first_counterexample"].is_null());
}

TEST(Campaign, ZeroTrials) {
  CampaignConfig c;
  c.trials = 0;
  const auto r = run_campaign(c);
  EXPECT_EQ(r.passed(), 0U);
  EXPECT_EQ(r.failed(), 0U);
  EXPECT_TRUE(r.to_json()["results"].empty());
}

TEST(Campaign, RejectsBadUniverseBounds) {
  CampaignConfig c;
  c.max_universe = 0;
  EXPECT_THROW(sample_trials(c), InvalidArgument);
  c.max_universe = 11;
  EXPECT_THROW(sample_trials(c), CapExceeded);
}
