#include "wallin/tile_index.hpp"

#include <algorithm>
#include <climits>

namespace wallin {

TileIndex::TileIndex(const WallProblem& p) {
  int lo_x = INT_MAX, lo_y = INT_MAX, hi_x = INT_MIN, hi_y = INT_MIN;
  auto extend = [&](TileCoord t) {
    lo_x = std::min(lo_x, t.x);
    lo_y = std::min(lo_y, t.y);
    hi_x = std::max(hi_x, t.x);
    hi_y = std::max(hi_y, t.y);
  };
  for (TileCoord t : p.terrain.walkable) extend(t);
  extend(p.terrain.inside_base);
  extend(p.terrain.outside_base);

  min_x_ = lo_x;
  min_y_ = lo_y;
  width_ = hi_x - lo_x + 1;
  height_ = hi_y - lo_y + 1;

  walkable_.assign(size(), 0);
  for (TileCoord t : p.terrain.walkable) walkable_[cell(t)] = 1;

  neighbors_.assign(static_cast<std::size_t>(size()) * kDirectionCount, -1);
  for (int c = 0; c < size(); ++c) {
    TileCoord t = coord(c);
    for (int d = 0; d < kDirectionCount; ++d) {
      neighbors_[c * kDirectionCount + d] = cell({t.x + kDirDx[d], t.y + kDirDy[d]});
    }
  }
  inside_ = cell(p.terrain.inside_base);
  outside_ = cell(p.terrain.outside_base);
}

int TileIndex::cell(TileCoord t) const noexcept {
  int x = t.x - min_x_;
  int y = t.y - min_y_;
  if (x < 0 || y < 0 || x >= width_ || y >= height_) return -1;
  return y * width_ + x;
}

void reach_dense(const TileIndex& index, const ReachGrid& grid, ReachMode mode, int origin,
                 std::vector<std::uint8_t>& reached, std::vector<int>& work, int stop_at) {
  reached.assign(index.size(), 0);
  work.clear();
  if (origin < 0) return;

  const bool gaps = !grid.h_squeeze.empty();
  auto open = [&](int c) { return c >= 0 && index.walkable(c) && !grid.blocked[c]; };
  auto mark = [&](int c) {
    if (!reached[c]) {
      reached[c] = 1;
      work.push_back(c);
    }
  };

  mark(origin);
  while (!work.empty()) {
    if (stop_at >= 0 && reached[stop_at]) return;
    int t = work.back();
    work.pop_back();

    if (open(t)) {
      for (int d = 0; d < kDirectionCount; ++d) {
        int n = index.neighbor(t, d);
        if (open(n)) mark(n);
      }
    }
    if (!gaps) continue;

    // Squeeze into a neighbouring seam tile: horizontal seams are entered
    // from above/below, vertical seams from the left/right.
    for (int d : {kNorth, kSouth}) {
      int n = index.neighbor(t, d);
      if (n >= 0 && grid.h_squeeze[n]) mark(n);
    }
    for (int d : {kWest, kEast}) {
      int n = index.neighbor(t, d);
      if (n >= 0 && grid.v_squeeze[n]) mark(n);
    }

    if (mode == ReachMode::extended && grid.blocked[t]) {
      if (grid.h_squeeze[t]) {
        for (int d : {kNorth, kSouth}) {
          int n = index.neighbor(t, d);
          if (open(n)) mark(n);
        }
      }
      if (grid.v_squeeze[t]) {
        for (int d : {kWest, kEast}) {
          int n = index.neighbor(t, d);
          if (open(n)) mark(n);
        }
      }
    }
  }
}

}  // namespace wallin
