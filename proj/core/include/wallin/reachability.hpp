#pragma once

#include <vector>

#include "wallin/grid.hpp"
#include "wallin/occupancy.hpp"

namespace wallin {

// Walkable tiles held by a building.
struct BlockedSet {
  TileSet tiles;
};

// Tiles an enemy starting at the outside anchor can reach.
struct ReachSet {
  TileSet tiles;
};

BlockedSet blocked_set(const OccupancyMap& occ);

// Least fixpoint of the movement rules:
//  - the outside anchor is reachable;
//  - king moves between walkable, unblocked tiles;
//  - a tile carrying a horizontal seam at least enemy_width_px wide is
//    entered from the tile above or below it; a vertical seam at least
//    enemy_height_px wide is entered from the left or right;
//  - extended mode only: a reached seam tile releases the open tiles on the
//    far side of the same axis.
// `seams` is normally gap_seams(occ, p); passing an empty list disables the
// squeeze rules.
ReachSet reach_fixpoint(const WallProblem& p, const OccupancyMap& occ,
                        const std::vector<GapSeam>& seams);

// True when the inside anchor is unreachable. Propagates OverlapError.
bool is_tight(const WallProblem& p, const Assignment& assign);

}  // namespace wallin
