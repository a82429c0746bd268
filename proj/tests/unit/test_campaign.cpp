#include <hermite/campaign.hpp>

#include <gtest/gtest.h>

using namespace hermite;

namespace {

CampaignOptions small(Theorem which) {
  CampaignOptions o;
  o.which = which;
  o.n_min = 1;
  o.n_max = 3;
  o.trials = 3;
  o.adversarial = 1;
  o.seed = 99;
  return o;
}

void expect_totals_add_up(const CampaignReport& r) {
  std::size_t problems = 0, agreements = 0;
  for (const auto& g : r.groups) {
    EXPECT_EQ(g.solvable + g.unsolvable, g.problems) << g.label;
    EXPECT_LE(g.agreements, g.problems) << g.label;
    problems += g.problems;
    agreements += g.agreements;
  }
  EXPECT_EQ(problems, r.problems);
  EXPECT_EQ(agreements, r.agreements);
}

}  // namespace

TEST(Campaign, TheoremNames) {
  for (const char* name : {"severi", "t2n1", "t2n2", "fn1n2_k12", "divisibility"}) {
    const auto t = parse_theorem(name);
    ASSERT_TRUE(t);
    EXPECT_STREQ(to_string(*t), name);
  }
  EXPECT_FALSE(parse_theorem("t2n3"));
}

TEST(Campaign, RejectsBadOptions) {
  CampaignOptions o = small(Theorem::t2n2);
  o.trials = 0;
  EXPECT_THROW(verify_theorem(o), std::invalid_argument);
  o = small(Theorem::t2n2);
  o.n_min = 3;
  o.n_max = 2;
  EXPECT_THROW(verify_theorem(o), std::invalid_argument);
}

TEST(Campaign, EveryTheoremPassesSmall) {
  for (Theorem t : {Theorem::severi, Theorem::t2n1, Theorem::t2n2, Theorem::fn1n2_k12,
                    Theorem::divisibility}) {
    const auto r = verify_theorem(small(t));
    EXPECT_TRUE(r.ok()) << to_string(t) << "\n" << format_text(r);
    EXPECT_GT(r.problems, 0u) << to_string(t);
    expect_totals_add_up(r);
  }
}

TEST(Campaign, VacuousTopTotalAtDegreeOneIsRecorded) {
  const auto r = verify_theorem(small(Theorem::t2n2));
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.front().find("n=1"), std::string::npos);
  for (const auto& g : r.groups) {
    if (g.degree == 1) {
      EXPECT_EQ(g.label.find("{1,1,1,1;"), std::string::npos);
    }
  }
}

TEST(Campaign, AdversarialVariantsProduceBothVerdicts) {
  const auto r = verify_theorem(small(Theorem::t2n2));
  std::size_t solvable = 0, unsolvable = 0;
  for (const auto& g : r.groups) {
    solvable += g.solvable;
    unsolvable += g.unsolvable;
  }
  EXPECT_GT(solvable, 0u);
  EXPECT_GT(unsolvable, 0u);
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(Campaign, DeterministicAcrossJobCounts) {
  CampaignOptions o = small(Theorem::t2n2);
  const auto serial = verify_theorem(o);
  o.jobs = 3;
  const auto parallel = verify_theorem(o);
  const auto again = verify_theorem(o);
  EXPECT_EQ(to_json(serial, false), to_json(parallel, false));
  EXPECT_EQ(to_json(parallel, false), to_json(again, false));
  o.seed = 100;
  EXPECT_NE(to_json(verify_theorem(o), false), to_json(serial, false));
}

// A disagreement record carries the canonical problem; parsing it back and
// analyzing it reproduces the recorded verdict pair.
TEST(Campaign, DisagreementRecordReplaysThroughAnalyze) {
  const Problem p(Scheme({1, 1, 1}, 1), {{0, 0}, {1, 0}, {2, 0}});
  CampaignReport r;
  r.disagreements.push_back({"{1,1,1; 1}", "line 3", 0, "example", false, false, write_problem(p)});
  const auto j = to_json(r);
  ASSERT_EQ(j["disagreements"].size(), 1u);
  const auto back = parse_problem(j["disagreements"][0]["problem"].get<std::string>());
  EXPECT_EQ(back.problem, p);
  const auto replay = analyze(back.problem);
  EXPECT_EQ(replay.solvable, j["disagreements"][0]["algebraic"].get<bool>());
  EXPECT_EQ(replay.geometry->ok(), j["disagreements"][0]["geometric"].get<bool>());
}

TEST(Campaign, TextReportEndsWithTotals) {
  const auto r = verify_theorem(small(Theorem::severi));
  const std::string text = format_text(r);
  EXPECT_NE(text.find("disagreements: 0"), std::string::npos);
  EXPECT_NE(text.find("theorem: severi"), std::string::npos);
}
