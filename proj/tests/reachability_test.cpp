#include <gtest/gtest.h>

#include <deque>
#include <random>

#include "problems.hpp"
#include "rule_oracle.hpp"
#include "wallin/errors.hpp"
#include "wallin/problem_parser.hpp"
#include "wallin/reachability.hpp"

namespace wallin {
namespace {

// Plain king-move flood fill over open tiles, ignoring gaps.
TileSet flood(const WallProblem& p, const TileSet& blocked) {
  TileSet seen{p.terrain.outside_base};
  std::deque<TileCoord> queue{p.terrain.outside_base};
  auto open = [&](TileCoord t) { return p.terrain.walkable.contains(t) && !blocked.contains(t); };
  while (!queue.empty()) {
    TileCoord t = queue.front();
    queue.pop_front();
    if (!open(t)) continue;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        TileCoord n{t.x + dx, t.y + dy};
        if (open(n) && seen.insert(n).second) queue.push_back(n);
      }
    }
  }
  return seen;
}

TileSet reach_of(const WallProblem& p, const Assignment& a) {
  OccupancyMap occ = occupied_map(a, p);
  return reach_fixpoint(p, occ, gap_seams(occ, p)).tiles;
}

TileSet minus(TileSet a, const TileSet& b) {
  for (TileCoord t : b) a.erase(t);
  return a;
}

bool subset(const TileSet& a, const TileSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

TEST(BlockedSet, MatchesOccupiedTiles) {
  WallProblem p = parse_problem(testing::read_fixture("corridor3.lp"));
  OccupancyMap occ = occupied_map({{{"block1", {2, 0}}}}, p);
  EXPECT_EQ(blocked_set(occ).tiles, (TileSet{{2, 0}, {2, 1}, {2, 2}}));
  EXPECT_TRUE(blocked_set(OccupancyMap{}).tiles.empty());
}

TEST(Reach, EmptyCorridorIsFullyReachable) {
  WallProblem p = parse_problem(testing::read_fixture("corridor3.lp"));
  TileSet r = reach_fixpoint(p, OccupancyMap{}, {}).tiles;
  EXPECT_EQ(r.size(), 15u);
  EXPECT_EQ(r, p.terrain.walkable);
}

TEST(Reach, BlockSealsCorridor) {
  WallProblem p = parse_problem(testing::read_fixture("corridor3.lp"));
  Assignment a{{{"block1", {2, 0}}}};
  TileSet r = reach_of(p, a);
  EXPECT_EQ(r, (TileSet{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(r, flood(p, {{2, 0}, {2, 1}, {2, 2}}));
  EXPECT_TRUE(is_tight(p, a));
}

// Three stacked 1x1 pieces fill the middle column of the corridor. The slit
// between the upper two is `top_of_middle + 8` pixels tall.
WallProblem squeeze_problem(int top_of_middle, ReachMode mode) {
  WallProblem p = parse_problem(testing::read_fixture("corridor3.lp"));
  p.types.clear();
  p.instances.clear();
  p.terrain.buildable.clear();
  p.types.emplace("upperType", BuildingTypeSpec{"upperType", 1, 1, 0, 0, 8, 8});
  p.types.emplace("middleType", BuildingTypeSpec{"middleType", 1, 1, 0, 0, top_of_middle, 8});
  p.types.emplace("plugType", BuildingTypeSpec{"plugType", 1, 1, 0, 0, 0, 0});
  p.instances = {{"upper", "upperType"}, {"middle", "middleType"}, {"plug", "plugType"}};
  p.terrain.buildable = {{"upperType", {{2, 0}}}, {"middleType", {{2, 1}}}, {"plugType", {{2, 2}}}};
  p.reach_mode = mode;
  return p;
}

const Assignment kStack{{{"upper", {2, 0}}, {"middle", {2, 1}}, {"plug", {2, 2}}}};

TEST(Reach, WideSlitLetsEnemyThroughInExtendedMode) {
  WallProblem p = squeeze_problem(8, ReachMode::extended);
  EXPECT_FALSE(is_tight(p, kStack));
  TileSet r = reach_of(p, kStack);
  EXPECT_TRUE(r.contains({2, 0}));
  EXPECT_TRUE(r.contains({2, 1}));
  EXPECT_FALSE(r.contains({2, 2}));
  EXPECT_TRUE(r.contains({4, 1}));
}

TEST(Reach, NarrowSlitHolds) {
  EXPECT_TRUE(is_tight(squeeze_problem(7, ReachMode::extended), kStack));
  EXPECT_TRUE(is_tight(squeeze_problem(7, ReachMode::literal), kStack));
}

TEST(Reach, LiteralModeEntersButNeverLeavesTheSlit) {
  WallProblem p = squeeze_problem(8, ReachMode::literal);
  EXPECT_TRUE(is_tight(p, kStack));
  TileSet r = reach_of(p, kStack);
  EXPECT_TRUE(r.contains({2, 0}));
  EXPECT_FALSE(r.contains({3, 0}));
}

TEST(Reach, SmallerEnemyFitsNarrowerSlit) {
  WallProblem p = squeeze_problem(7, ReachMode::extended);
  p.enemy_height_px = 15;
  EXPECT_FALSE(is_tight(p, kStack));
  // Enemy width only governs side-by-side seams.
  p.enemy_height_px = 16;
  p.enemy_width_px = 1;
  EXPECT_TRUE(is_tight(p, kStack));
}

TEST(Reach, EmptySeamListDisablesSqueezing) {
  WallProblem p = squeeze_problem(8, ReachMode::extended);
  OccupancyMap occ = occupied_map(kStack, p);
  TileSet r = reach_fixpoint(p, occ, {}).tiles;
  EXPECT_EQ(r, flood(p, blocked_set(occ).tiles));
}

TEST(IsTight, Examples) {
  WallProblem p = squeeze_problem(8, ReachMode::extended);
  EXPECT_FALSE(is_tight(p, {{{"middle", {2, 1}}}}));
  EXPECT_FALSE(is_tight(p, Assignment{}));
  p.instances.push_back({"second", "plugType"});
  EXPECT_THROW(is_tight(p, {{{"plug", {2, 2}}, {"second", {2, 2}}}}), OverlapError);
}

TEST(IsTight, UnwalkableAnchorCanStillBeSealed) {
  WallProblem p = parse_problem(testing::read_fixture("corridor3.lp"));
  p.terrain.walkable.erase(p.terrain.inside_base);
  EXPECT_TRUE(is_tight(p, Assignment{}));
}

class RandomCorpus : public ::testing::TestWithParam<std::uint32_t> {};

Assignment random_assignment(const WallProblem& p, std::mt19937& rng) {
  Assignment a;
  for (const auto& inst : p.instances) {
    const TileSet& c = p.candidates(inst);
    if (c.empty()) continue;
    auto it = c.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng));
    a.placements[inst.name] = *it;
  }
  return a;
}

TEST_P(RandomCorpus, FixpointProperties) {
  std::mt19937 rng(GetParam());
  for (ReachMode mode : {ReachMode::literal, ReachMode::extended}) {
    WallProblem p = testing::random_problem(GetParam(), mode);
    for (int round = 0; round < 30; ++round) {
      Assignment a = random_assignment(p, rng);
      testing::Grounding g = testing::ground(p, a);
      if (g.overlap) continue;
      OccupancyMap occ = occupied_map(a, p);
      auto seams = gap_seams(occ, p);
      const TileSet blocked = blocked_set(occ).tiles;
      const TileSet r = reach_fixpoint(p, occ, seams).tiles;

      // Same least model as the grounded rules.
      EXPECT_EQ(r, g.reach);
      EXPECT_EQ(is_tight(p, a), g.tight);
      EXPECT_TRUE(r.contains(p.terrain.outside_base));

      // Without squeezing, reach is a plain flood fill.
      const TileSet plain = reach_fixpoint(p, occ, {}).tiles;
      EXPECT_EQ(plain, flood(p, blocked));
      EXPECT_EQ(plain, testing::ground(p, a, false).reach);
      EXPECT_TRUE(subset(plain, r));

      // Every reached blocked tile carries a wide enough seam.
      for (TileCoord t : r) {
        if (!blocked.contains(t)) continue;
        bool wide = false;
        for (const auto& s : seams) {
          int need = s.orientation == SeamOrientation::horizontal ? p.enemy_width_px : p.enemy_height_px;
          wide |= s.from == t && s.width_px >= need;
        }
        EXPECT_TRUE(wide || t == p.terrain.outside_base) << t;
      }

      if (mode == ReachMode::literal) {
        // Squeezing only ever reaches blocked tiles.
        EXPECT_EQ(minus(r, blocked), minus(plain, blocked));
      } else {
        WallProblem lit = p;
        lit.reach_mode = ReachMode::literal;
        EXPECT_TRUE(subset(reach_fixpoint(lit, occ, seams).tiles, r));
      }

      // A smaller enemy reaches at least as much.
      WallProblem small = p;
      small.enemy_width_px = std::max(1, p.enemy_width_px - 6);
      small.enemy_height_px = std::max(1, p.enemy_height_px - 6);
      EXPECT_TRUE(subset(r, reach_fixpoint(small, occ, seams).tiles));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomCorpus, ::testing::Range<std::uint32_t>(1, 81));

}  // namespace
}  // namespace wallin
