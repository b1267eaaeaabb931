#include <gtest/gtest.h>

#include <algorithm>

#include "problems.hpp"
#include "rule_oracle.hpp"
#include "wallin/errors.hpp"
#include "wallin/problem_parser.hpp"
#include "wallin/solver.hpp"

namespace wallin {
namespace {

using testing::read_fixture;

WallProblem corridor3() { return parse_problem(read_fixture("corridor3.lp")); }

// Three 1x1 pieces with distinct top/bottom gaps on the corridor. Only a
// full column seals it, so the stacking order decides the score.
WallProblem three_pieces() {
  WallProblem p = parse_problem(read_fixture("corridor3_infeasible.lp"));
  p.types.clear();
  p.instances.clear();
  TileSet cands = p.terrain.buildable.at("postType");
  p.terrain.buildable.clear();
  const BuildingTypeSpec specs[] = {
      {"aType", 1, 1, 0, 0, 2, 6}, {"bType", 1, 1, 0, 0, 3, 1}, {"cType", 1, 1, 0, 0, 5, 4}};
  const char* names[] = {"pA", "pB", "pC"};
  for (int i = 0; i < 3; ++i) {
    p.types.emplace(specs[i].name, specs[i]);
    p.instances.push_back({names[i], specs[i].name});
    p.terrain.buildable[specs[i].name] = cands;
  }
  return p;
}

std::vector<Assignment> assignments(const std::vector<Solution>& sols) {
  std::vector<Assignment> out;
  for (const auto& s : sols) out.push_back(s.assignment);
  return out;
}

TEST(CheckAssignment, Corridor3) {
  WallProblem p = corridor3();
  Verdict v = check_assignment(p, {{{"block1", {2, 0}}}});
  EXPECT_TRUE(v.buildable_ok);
  EXPECT_TRUE(v.overlap_ok);
  EXPECT_TRUE(v.tight);
  ASSERT_TRUE(v.valid());
  EXPECT_EQ(*v.score, (Score{0, 0}));

  v = check_assignment(p, {{{"block1", {1, 0}}}});
  EXPECT_FALSE(v.buildable_ok);
  EXPECT_TRUE(v.tight);
  EXPECT_FALSE(v.valid());
}

TEST(CheckAssignment, OverlapAndLeak) {
  WallProblem p = parse_problem(read_fixture("corridor3_infeasible.lp"));
  Verdict v = check_assignment(p, {{{"postA", {1, 0}}, {"postB", {1, 0}}}});
  EXPECT_TRUE(v.buildable_ok);
  EXPECT_FALSE(v.overlap_ok);
  EXPECT_FALSE(v.tight);
  EXPECT_FALSE(v.valid());

  v = check_assignment(p, {{{"postA", {1, 0}}, {"postB", {1, 1}}}});
  EXPECT_TRUE(v.overlap_ok);
  EXPECT_FALSE(v.tight);
  EXPECT_FALSE(v.valid());
}

TEST(CheckAssignment, RejectsPartialOrUnknown) {
  WallProblem p = parse_problem(read_fixture("corridor3_infeasible.lp"));
  EXPECT_THROW(check_assignment(p, {{{"postA", {1, 0}}}}), AssignmentError);
  EXPECT_THROW(check_assignment(p, {{{"postA", {1, 0}}, {"postB", {1, 1}}, {"ghost", {2, 2}}}}),
               AssignmentError);
}

TEST(EnumerateValid, Corridor3HasOneWall) {
  auto sols = enumerate_valid(corridor3());
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].assignment, (Assignment{{{"block1", {2, 0}}}}));
  EXPECT_EQ(sols[0].score, (Score{0, 0}));
  EXPECT_EQ(sols[0].stage_index, 1);
}

TEST(EnumerateValid, TwoPostsCannotSeal) {
  WallProblem p = parse_problem(read_fixture("corridor3_infeasible.lp"));
  EXPECT_TRUE(enumerate_valid(p).empty());
  EXPECT_FALSE(solve_optimal(p).has_value());
  EXPECT_TRUE(brute_force_oracle(p).empty());
}

TEST(EnumerateValid, InstanceWithoutCandidates) {
  WallProblem p = corridor3();
  p.terrain.buildable.clear();
  EXPECT_TRUE(enumerate_valid(p).empty());
  EXPECT_TRUE(brute_force_oracle(p).empty());
}

TEST(SolveOptimal, StackOrderDecidesScore) {
  WallProblem p = three_pieces();
  auto all = enumerate_valid(p);
  EXPECT_EQ(all.size(), 18u);  // 3 columns x 6 stacking orders

  auto best = solve_optimal(p);
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->assignment, (Assignment{{{"pA", {1, 2}}, {"pB", {1, 1}}, {"pC", {1, 0}}}}));
  EXPECT_EQ(best->score, (Score{20, 0}));

  testing::Grounding g = testing::ground(p, best->assignment);
  EXPECT_TRUE(g.tight);
  EXPECT_EQ(g.vertical_total, 20);
  EXPECT_EQ(g.horizontal_total, 0);
  for (const auto& s : all) EXPECT_GE(s.score.combined(), 20);
}

TEST(BestSolutions, OrderedByObjective) {
  WallProblem p = three_pieces();
  auto top = best_solutions(p, 4);
  ASSERT_EQ(top.size(), 4u);
  // c/b/a stacks score 20 in each column, then b/c/a scores 24.
  EXPECT_EQ(top[0].score, (Score{20, 0}));
  EXPECT_EQ(top[1].score, (Score{20, 0}));
  EXPECT_EQ(top[2].score, (Score{20, 0}));
  EXPECT_EQ(top[3].score, (Score{24, 0}));
  EXPECT_EQ(top[1].assignment.placements.at("pA"), (TileCoord{2, 2}));

  SearchOptions plain;
  plain.optimize = false;
  auto first = best_solutions(p, 1, plain);
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(first[0].assignment, enumerate_valid(p)[0].assignment);
  // pA sits on top in the canonically first wall.
  EXPECT_EQ(first[0].assignment.placements.at("pA"), (TileCoord{1, 0}));
}

TEST(ScoreOrder, TieBreaks) {
  WallProblem p = three_pieces();
  Solution a{{{{"pA", {1, 0}}, {"pB", {1, 1}}, {"pC", {1, 2}}}}, {10, 5}};
  Solution b{{{{"pA", {1, 0}}, {"pB", {1, 1}}, {"pC", {1, 2}}}}, {5, 10}};
  EXPECT_TRUE(score_less(p, b, a));
  Solution c = a;
  c.assignment.placements["pA"] = {2, 0};
  EXPECT_TRUE(score_less(p, a, c));
  EXPECT_FALSE(score_less(p, a, a));
  EXPECT_TRUE(canonical_less(p, a.assignment, c.assignment));
  Solution d = a;
  d.assignment.placements["pA"] = {0, 1};
  EXPECT_TRUE(canonical_less(p, c.assignment, d.assignment));
}

WallProblem two_row_corridor() {
  WallProblem p;
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 5; ++x) p.terrain.walkable.insert({x, y});
  }
  p.terrain.outside_base = {0, 0};
  p.terrain.inside_base = {4, 1};
  p.types.emplace("blockType", BuildingTypeSpec{"blockType", 1, 1, 0, 0, 0, 0});
  p.terrain.buildable["blockType"] = {{2, 0}, {2, 1}};
  p.instances = {{"blockA", "blockType"}, {"blockB", "blockType"}};
  p.stages = {{"blockA"}, {"blockA", "blockB"}};
  return p;
}

TEST(SolveIncremental, FallsThroughToSecondStage) {
  WallProblem p = two_row_corridor();
  auto sol = solve_incremental(p);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(sol->stage_index, 2);
  EXPECT_EQ(sol->assignment, (Assignment{{{"blockA", {2, 0}}, {"blockB", {2, 1}}}}));
}

TEST(SolveIncremental, FirstStageWins) {
  WallProblem p = two_row_corridor();
  p.types.at("blockType").height = 2;
  p.terrain.buildable["blockType"] = {{2, 0}};
  p.stages = {{"blockA"}, {"blockA", "blockB"}};
  auto sol = solve_incremental(p);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(sol->stage_index, 1);
  EXPECT_EQ(sol->assignment.placements.size(), 1u);
}

TEST(SolveIncremental, NoStagesMeansOneStage) {
  WallProblem p = two_row_corridor();
  p.stages.clear();
  auto sol = solve_incremental(p);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(sol->stage_index, 1);
}

TEST(SolveIncremental, AllStagesInfeasible) {
  WallProblem p = two_row_corridor();
  p.terrain.buildable["blockType"] = {{2, 0}, {3, 0}};
  EXPECT_FALSE(solve_incremental(p).has_value());
}

TEST(SolveIncremental, MalformedStages) {
  WallProblem p = two_row_corridor();
  p.stages = {{"blockA", "ghost"}, {"blockA", "blockB"}};
  EXPECT_THROW(solve_incremental(p), StageError);
  p.stages = {{"blockB"}, {"blockA"}, {"blockA", "blockB"}};
  EXPECT_THROW(validate_stages(p), StageError);
  p.stages = {{"blockA"}};
  EXPECT_THROW(validate_stages(p), StageError);
  p.stages = {{"blockA"}, {"blockA", "blockB"}};
  EXPECT_NO_THROW(validate_stages(p));
}

TEST(BruteForceOracle, RefusesHugeProducts) {
  WallProblem p;
  p.terrain.outside_base = {0, 0};
  p.terrain.inside_base = {9, 9};
  for (int y = 0; y < 10; ++y) {
    for (int x = 0; x < 10; ++x) p.terrain.walkable.insert({x, y});
  }
  p.types.emplace("t", BuildingTypeSpec{"t", 1, 1, 0, 0, 0, 0});
  for (int y = 2; y < 6; ++y) {
    for (int x = 0; x < 10; ++x) p.terrain.buildable["t"].insert({x, y});
  }
  for (int i = 0; i < 4; ++i) p.instances.push_back({"b" + std::to_string(i), "t"});
  EXPECT_THROW(brute_force_oracle(p), TooLargeError);  // 40^4 > 10^6
  p.instances.resize(2);
  EXPECT_NO_THROW(brute_force_oracle(p));
}

class RandomCorpus : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(RandomCorpus, SearchMatchesOracle) {
  for (ReachMode mode : {ReachMode::literal, ReachMode::extended}) {
    WallProblem p = testing::random_problem(GetParam(), mode);
    auto oracle = brute_force_oracle(p);
    auto found = enumerate_valid(p);
    ASSERT_EQ(found, oracle) << "seed " << GetParam() << " mode " << to_string(mode);

    for (const auto& s : found) {
      Verdict v = check_assignment(p, s.assignment);
      ASSERT_TRUE(v.valid());
      EXPECT_EQ(*v.score, s.score);
    }

    for (int mask = 0; mask < 8; ++mask) {
      SearchOptions o;
      o.overlap_cut = mask & 1;
      o.order_by_domain = mask & 2;
      o.path_cut = mask & 4;
      o.workers = 1 + mask % 3;
      EXPECT_EQ(enumerate_valid(p, std::nullopt, o), oracle) << "mask " << mask;
    }
  }
}

TEST_P(RandomCorpus, RankingAndLimits) {
  WallProblem p = testing::random_problem(GetParam(), ReachMode::extended);
  auto all = enumerate_valid(p);
  auto ranked = all;
  std::sort(ranked.begin(), ranked.end(),
            [&](const Solution& a, const Solution& b) { return score_less(p, a, b); });

  for (std::size_t k : {std::size_t{1}, std::size_t{3}, all.size() + 2}) {
    std::size_t n = std::min(k, all.size());
    EXPECT_EQ(best_solutions(p, k), std::vector<Solution>(ranked.begin(), ranked.begin() + n));
    EXPECT_EQ(enumerate_valid(p, k), std::vector<Solution>(all.begin(), all.begin() + n));
  }

  auto best = solve_optimal(p);
  ASSERT_EQ(best.has_value(), !all.empty());
  if (best) {
    EXPECT_EQ(*best, ranked.front());
    for (const auto& s : all) EXPECT_LE(best->score.combined(), s.score.combined());
  }

  SearchOptions one, four;
  one.workers = 1;
  four.workers = 4;
  EXPECT_EQ(best_solutions(p, 5, one), best_solutions(p, 5, four));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [&](const Solution& a, const Solution& b) {
    return canonical_less(p, a.assignment, b.assignment);
  }));
}

TEST_P(RandomCorpus, MoreCandidatesNeverHurt) {
  WallProblem p = testing::random_problem(GetParam(), ReachMode::extended);
  WallProblem narrow = p;
  for (auto& [type, cands] : narrow.terrain.buildable) {
    if (cands.size() > 1) cands.erase(std::prev(cands.end()));
  }
  auto wide_best = solve_optimal(p);
  auto narrow_best = solve_optimal(narrow);
  if (narrow_best) {
    ASSERT_TRUE(wide_best.has_value());
    EXPECT_LE(wide_best->score.combined(), narrow_best->score.combined());
  }
  auto narrow_all = assignments(enumerate_valid(narrow));
  auto wide_all = assignments(enumerate_valid(p));
  for (const auto& a : narrow_all) {
    EXPECT_NE(std::find(wide_all.begin(), wide_all.end(), a), wide_all.end());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomCorpus, ::testing::Range<std::uint32_t>(1, 121));

}  // namespace
}  // namespace wallin
