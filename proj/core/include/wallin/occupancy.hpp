#pragma once

#include <map>
#include <string>
#include <vector>

#include "wallin/grid.hpp"

namespace wallin {

// Tiles that are both inside a placed footprint and walkable, keyed to the
// occupying instance. Non-walkable footprint tiles are not recorded.
struct OccupancyMap {
  std::map<TileCoord, std::string> by_tile;
};

enum class SeamOrientation { horizontal, vertical };

// Walkable pixel slit between two 4-adjacent tiles held by different
// instances. Horizontal seams join left/right neighbours, vertical seams
// join top/bottom neighbours.
struct GapSeam {
  TileCoord from;
  TileCoord to;
  SeamOrientation orientation = SeamOrientation::horizontal;
  int width_px = 0;

  friend bool operator==(const GapSeam&, const GapSeam&) = default;
};

struct GapTotals {
  int vertical_px = 0;
  int horizontal_px = 0;

  friend bool operator==(const GapTotals&, const GapTotals&) = default;
};

// Throws OverlapError listing every walkable tile claimed twice, and
// AssignmentError when a placement names an unknown instance.
OccupancyMap occupied_map(const Assignment& assign, const WallProblem& p);

// Both orderings of every adjacent pair are emitted, sorted by (from, to).
std::vector<GapSeam> gap_seams(const OccupancyMap& occ, const WallProblem& p);

GapTotals gap_totals(const std::vector<GapSeam>& seams);

}  // namespace wallin
