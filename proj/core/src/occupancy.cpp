#include "wallin/occupancy.hpp"

#include <algorithm>

#include "wallin/errors.hpp"

namespace wallin {

namespace {

std::string describe(const std::vector<OverlapConflict>& conflicts) {
  std::string msg = "buildings overlap on " + std::to_string(conflicts.size()) + " tile(s)";
  const auto& c = conflicts.front();
  msg += ", first at (" + std::to_string(c.tile.x) + "," + std::to_string(c.tile.y) + ") between " +
         c.first + " and " + c.second;
  return msg;
}

}  // namespace

OverlapError::OverlapError(std::vector<OverlapConflict> conflicts)
    : Error(describe(conflicts)), conflicts_(std::move(conflicts)) {}

OccupancyMap occupied_map(const Assignment& assign, const WallProblem& p) {
  OccupancyMap occ;
  std::vector<OverlapConflict> conflicts;
  // Declaration order keeps conflict reports stable.
  for (const auto& inst : p.instances) {
    auto at = assign.placements.find(inst.name);
    if (at == assign.placements.end()) continue;
    for (TileCoord t : footprint(p.type_of(inst), at->second)) {
      if (!p.terrain.walkable.contains(t)) continue;
      auto [it, fresh] = occ.by_tile.emplace(t, inst.name);
      if (!fresh) conflicts.push_back({t, it->second, inst.name});
    }
  }
  for (const auto& [name, _] : assign.placements) {
    if (!p.find_instance(name)) throw AssignmentError("unknown instance '" + name + "'");
  }
  if (!conflicts.empty()) throw OverlapError(std::move(conflicts));
  return occ;
}

std::vector<GapSeam> gap_seams(const OccupancyMap& occ, const WallProblem& p) {
  auto type_at = [&](const std::string& inst) -> const BuildingTypeSpec& {
    return p.type_of(*p.find_instance(inst));
  };

  std::vector<GapSeam> seams;
  for (const auto& [t1, b1] : occ.by_tile) {
    const BuildingTypeSpec& s1 = type_at(b1);
    struct Step {
      int dx, dy;
    };
    for (Step d : {Step{0, -1}, Step{-1, 0}, Step{1, 0}, Step{0, 1}}) {
      TileCoord t2{t1.x + d.dx, t1.y + d.dy};
      auto it = occ.by_tile.find(t2);
      if (it == occ.by_tile.end() || it->second == b1) continue;
      const BuildingTypeSpec& s2 = type_at(it->second);
      GapSeam seam{t1, t2, d.dx ? SeamOrientation::horizontal : SeamOrientation::vertical, 0};
      if (d.dy == 1) {
        seam.width_px = s1.bottom_gap + s2.top_gap;
      } else if (d.dy == -1) {
        seam.width_px = s2.bottom_gap + s1.top_gap;
      } else if (d.dx == 1) {
        seam.width_px = s1.right_gap + s2.left_gap;
      } else {
        seam.width_px = s2.right_gap + s1.left_gap;
      }
      seams.push_back(seam);
    }
  }
  std::sort(seams.begin(), seams.end(), [](const GapSeam& a, const GapSeam& b) {
    if (a.from != b.from) return a.from < b.from;
    return a.to < b.to;
  });
  return seams;
}

GapTotals gap_totals(const std::vector<GapSeam>& seams) {
  GapTotals totals;
  for (const auto& s : seams) {
    (s.orientation == SeamOrientation::vertical ? totals.vertical_px : totals.horizontal_px) +=
        s.width_px;
  }
  return totals;
}

}  // namespace wallin
