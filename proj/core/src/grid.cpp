#include "wallin/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace wallin {

std::ostream& operator<<(std::ostream& os, const TileCoord& t) {
  return os << '(' << t.x << ',' << t.y << ')';
}

const char* to_string(ReachMode mode) {
  switch (mode) {
    case ReachMode::literal:
      return "literal";
    case ReachMode::extended:
      return "extended";
  }
  return "?";
}

const BuildingInstance* WallProblem::find_instance(const std::string& name) const {
  auto it = std::find_if(instances.begin(), instances.end(),
                         [&](const BuildingInstance& b) { return b.name == name; });
  return it == instances.end() ? nullptr : &*it;
}

const BuildingTypeSpec& WallProblem::type_of(const BuildingInstance& inst) const {
  auto it = types.find(inst.type_name);
  if (it == types.end()) {
    throw std::out_of_range("instance '" + inst.name + "' has undeclared type '" +
                            inst.type_name + "'");
  }
  return it->second;
}

const TileSet& WallProblem::candidates(const BuildingInstance& inst) const {
  static const TileSet kNone;
  auto it = terrain.buildable.find(inst.type_name);
  return it == terrain.buildable.end() ? kNone : it->second;
}

WallProblem WallProblem::restricted_to(const std::set<std::string>& names) const {
  WallProblem out = *this;
  out.instances.clear();
  for (const auto& inst : instances) {
    if (names.contains(inst.name)) out.instances.push_back(inst);
  }
  out.stages.clear();
  return out;
}

namespace {

std::map<std::string, std::string> instance_map(const WallProblem& p) {
  std::map<std::string, std::string> m;
  for (const auto& inst : p.instances) m.emplace(inst.name, inst.type_name);
  return m;
}

}  // namespace

bool operator==(const WallProblem& a, const WallProblem& b) {
  return a.types == b.types && instance_map(a) == instance_map(b) &&
         a.instances.size() == b.instances.size() && a.terrain == b.terrain &&
         a.enemy_width_px == b.enemy_width_px && a.enemy_height_px == b.enemy_height_px &&
         a.stages == b.stages && a.reach_mode == b.reach_mode;
}

bool Assignment::is_total(const WallProblem& p) const {
  return std::all_of(p.instances.begin(), p.instances.end(),
                     [&](const BuildingInstance& b) { return placements.contains(b.name); });
}

TileSet footprint(const BuildingTypeSpec& spec, TileCoord origin) {
  TileSet tiles;
  for (int y = origin.y; y < origin.y + spec.height; ++y) {
    for (int x = origin.x; x < origin.x + spec.width; ++x) tiles.insert({x, y});
  }
  return tiles;
}

}  // namespace wallin
