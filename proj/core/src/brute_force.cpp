// Exhaustive reference enumeration. Shares only the data model with the
// search: occupancy, seams and reachability are recomputed here from the
// rules directly, without the dense index or the worklist.

#include <map>
#include <set>

#include "wallin/errors.hpp"
#include "wallin/solver.hpp"

namespace wallin {

namespace {

struct NaiveSeam {
  TileCoord from;
  bool horizontal;
  int width;
};

bool naive_tight(const WallProblem& p, const std::map<TileCoord, std::size_t>& occupied,
                 const std::vector<NaiveSeam>& seams) {
  const TileSet& walk = p.terrain.walkable;
  auto blocked = [&](TileCoord t) { return occupied.contains(t); };
  auto open = [&](TileCoord t) { return walk.contains(t) && !blocked(t); };

  TileSet reach{p.terrain.outside_base};
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<TileCoord> fresh;
    auto derive = [&](TileCoord t) {
      if (!reach.contains(t)) fresh.push_back(t);
    };
    for (TileCoord t : reach) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          TileCoord n{t.x + dx, t.y + dy};
          if ((dx || dy) && open(t) && open(n)) derive(n);
        }
      }
    }
    for (const auto& s : seams) {
      const int need = s.horizontal ? p.enemy_width_px : p.enemy_height_px;
      if (s.width < need) continue;
      TileCoord a = s.horizontal ? TileCoord{s.from.x, s.from.y - 1} : TileCoord{s.from.x - 1, s.from.y};
      TileCoord b = s.horizontal ? TileCoord{s.from.x, s.from.y + 1} : TileCoord{s.from.x + 1, s.from.y};
      if (reach.contains(a) || reach.contains(b)) derive(s.from);
      if (p.reach_mode == ReachMode::extended && reach.contains(s.from)) {
        if (open(a)) derive(a);
        if (open(b)) derive(b);
      }
    }
    for (TileCoord t : fresh) changed |= reach.insert(t).second;
  }
  return !reach.contains(p.terrain.inside_base);
}

}  // namespace

std::vector<Solution> brute_force_oracle(const WallProblem& p) {
  const std::size_t n = p.instances.size();
  std::vector<std::vector<TileCoord>> domains;
  std::size_t product = 1;
  for (const auto& inst : p.instances) {
    const TileSet& cands = p.candidates(inst);
    domains.emplace_back(cands.begin(), cands.end());
    if (cands.empty()) return {};
    product *= cands.size();
    if (product > kOracleProductLimit) {
      throw TooLargeError("oracle search space exceeds " + std::to_string(kOracleProductLimit) +
                          " assignments");
    }
  }

  std::vector<Solution> out;
  std::vector<std::size_t> odometer(n, 0);
  for (;;) {
    std::map<TileCoord, std::size_t> occupied;
    bool overlap = false;
    for (std::size_t i = 0; i < n && !overlap; ++i) {
      for (TileCoord t : footprint(p.type_of(p.instances[i]), domains[i][odometer[i]])) {
        if (!p.terrain.walkable.contains(t)) continue;
        if (!occupied.emplace(t, i).second) {
          overlap = true;
          break;
        }
      }
    }

    if (!overlap) {
      std::vector<NaiveSeam> seams;
      Score score;
      for (const auto& [t1, b1] : occupied) {
        const BuildingTypeSpec& s1 = p.type_of(p.instances[b1]);
        const std::pair<int, int> steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (auto [dx, dy] : steps) {
          auto it = occupied.find({t1.x + dx, t1.y + dy});
          if (it == occupied.end() || it->second == b1) continue;
          const BuildingTypeSpec& s2 = p.type_of(p.instances[it->second]);
          int w = 0;
          if (dx == 1) w = s1.right_gap + s2.left_gap;
          if (dx == -1) w = s2.right_gap + s1.left_gap;
          if (dy == 1) w = s1.bottom_gap + s2.top_gap;
          if (dy == -1) w = s2.bottom_gap + s1.top_gap;
          seams.push_back({t1, dx != 0, w});
          (dx != 0 ? score.horizontal_px : score.vertical_px) += w;
        }
      }
      if (naive_tight(p, occupied, seams)) {
        Solution sol;
        for (std::size_t i = 0; i < n; ++i) {
          sol.assignment.placements.emplace(p.instances[i].name, domains[i][odometer[i]]);
        }
        sol.score = score;
        out.push_back(std::move(sol));
      }
    }

    // Last instance varies fastest, so output comes out canonically sorted.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++odometer[i] < domains[i].size()) break;
      odometer[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace wallin
