#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "wallin/grid.hpp"

namespace wallin {

// King-move directions. The first four are the orthogonal ones.
enum Direction : int { kNorth, kSouth, kWest, kEast, kNorthWest, kNorthEast, kSouthWest, kSouthEast };
inline constexpr int kDirectionCount = 8;
inline constexpr std::array<int, kDirectionCount> kDirDx = {0, 0, -1, 1, -1, 1, -1, 1};
inline constexpr std::array<int, kDirectionCount> kDirDy = {-1, 1, 0, 0, -1, -1, 1, 1};

// Dense row-major numbering of the bounding box around the walkable tiles
// and both anchors. Tiles outside the box are never walkable, so nothing a
// fixpoint can reach lies outside it.
class TileIndex {
 public:
  explicit TileIndex(const WallProblem& p);

  int size() const noexcept { return width_ * height_; }
  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  // -1 when the tile lies outside the box.
  int cell(TileCoord t) const noexcept;
  TileCoord coord(int cell) const noexcept {
    return {min_x_ + cell % width_, min_y_ + cell / width_};
  }
  bool walkable(int cell) const noexcept { return walkable_[cell] != 0; }
  // -1 when the neighbour falls outside the box.
  int neighbor(int cell, int dir) const noexcept { return neighbors_[cell * kDirectionCount + dir]; }

  int inside_cell() const noexcept { return inside_; }
  int outside_cell() const noexcept { return outside_; }

 private:
  int min_x_ = 0;
  int min_y_ = 0;
  int width_ = 1;
  int height_ = 1;
  std::vector<std::uint8_t> walkable_;
  std::vector<int> neighbors_;
  int inside_ = -1;
  int outside_ = -1;
};

// Per-cell inputs to the reachability rules.
struct ReachGrid {
  std::span<const std::uint8_t> blocked;
  // Cell carries a horizontal seam at least as wide as the enemy; empty span
  // disables the gap rules entirely.
  std::span<const std::uint8_t> h_squeeze;
  // Same for vertical seams against the enemy height.
  std::span<const std::uint8_t> v_squeeze;
};

// Worklist least fixpoint from `origin`. `reached` is resized and
// overwritten; `work` is scratch space. O(cells + seams). With `stop_at`
// set, returns as soon as that cell is reached and `reached` is partial.
void reach_dense(const TileIndex& index, const ReachGrid& grid, ReachMode mode, int origin,
                 std::vector<std::uint8_t>& reached, std::vector<int>& work, int stop_at = -1);

}  // namespace wallin
