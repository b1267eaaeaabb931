#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace wallin {

// Build-tile coordinate. y grows southward, so "above" means smaller y.
// Ordering is row-major: (y, x) lexicographic.
struct TileCoord {
  int x = 0;
  int y = 0;

  friend bool operator==(const TileCoord&, const TileCoord&) = default;
  friend std::strong_ordering operator<=>(const TileCoord& a, const TileCoord& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

std::ostream& operator<<(std::ostream& os, const TileCoord& t);

using TileSet = std::set<TileCoord>;

// Tile size plus the walkable pixel margin a building leaves on each side.
// Negative gaps mean the building blocks beyond its tiles.
struct BuildingTypeSpec {
  std::string name;
  int width = 1;
  int height = 1;
  int left_gap = 0;
  int right_gap = 0;
  int top_gap = 0;
  int bottom_gap = 0;

  friend bool operator==(const BuildingTypeSpec&, const BuildingTypeSpec&) = default;
};

struct BuildingInstance {
  std::string name;
  std::string type_name;

  friend bool operator==(const BuildingInstance&, const BuildingInstance&) = default;
};

struct TerrainWindow {
  TileSet walkable;
  std::map<std::string, TileSet> buildable;  // type name -> candidate origins
  TileCoord inside_base;
  TileCoord outside_base;

  friend bool operator==(const TerrainWindow&, const TerrainWindow&) = default;
};

enum class ReachMode {
  literal,   // gap rules only lead into occupied tiles
  extended,  // plus exit rules out of a squeezed tile
};

const char* to_string(ReachMode mode);

inline constexpr int kDefaultEnemyPx = 16;

struct WallProblem {
  std::map<std::string, BuildingTypeSpec> types;
  std::vector<BuildingInstance> instances;  // declaration order
  TerrainWindow terrain;
  int enemy_width_px = kDefaultEnemyPx;
  int enemy_height_px = kDefaultEnemyPx;
  // Ordered instance subsets tried one after another; empty means a single
  // stage holding every instance.
  std::vector<std::set<std::string>> stages;
  ReachMode reach_mode = ReachMode::extended;

  const BuildingInstance* find_instance(const std::string& name) const;
  const BuildingTypeSpec& type_of(const BuildingInstance& inst) const;
  // Candidate origins for an instance; empty when its type has none declared.
  const TileSet& candidates(const BuildingInstance& inst) const;

  // Copy holding only the named instances (declaration order kept, stages
  // dropped).
  WallProblem restricted_to(const std::set<std::string>& names) const;

  // Instance declaration order is presentation only and is not compared.
  friend bool operator==(const WallProblem& a, const WallProblem& b);
};

struct Assignment {
  std::map<std::string, TileCoord> placements;

  bool is_total(const WallProblem& p) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Tiles covered by a building of `spec` whose top-left tile is `origin`.
TileSet footprint(const BuildingTypeSpec& spec, TileCoord origin);

}  // namespace wallin
