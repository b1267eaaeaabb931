#include "wallin/reachability.hpp"

#include "wallin/tile_index.hpp"

namespace wallin {

BlockedSet blocked_set(const OccupancyMap& occ) {
  BlockedSet out;
  for (const auto& [tile, _] : occ.by_tile) out.tiles.insert(out.tiles.end(), tile);
  return out;
}

ReachSet reach_fixpoint(const WallProblem& p, const OccupancyMap& occ,
                        const std::vector<GapSeam>& seams) {
  TileIndex index(p);
  const auto n = static_cast<std::size_t>(index.size());
  std::vector<std::uint8_t> blocked(n, 0), h_squeeze(n, 0), v_squeeze(n, 0);

  for (const auto& [tile, _] : occ.by_tile) {
    if (int c = index.cell(tile); c >= 0) blocked[c] = 1;
  }
  for (const auto& s : seams) {
    int c = index.cell(s.from);
    if (c < 0) continue;
    if (s.orientation == SeamOrientation::horizontal && s.width_px >= p.enemy_width_px) {
      h_squeeze[c] = 1;
    } else if (s.orientation == SeamOrientation::vertical && s.width_px >= p.enemy_height_px) {
      v_squeeze[c] = 1;
    }
  }

  std::vector<std::uint8_t> reached;
  std::vector<int> work;
  reach_dense(index, {blocked, h_squeeze, v_squeeze}, p.reach_mode, index.outside_cell(), reached,
              work);

  ReachSet out;
  for (int c = 0; c < index.size(); ++c) {
    if (reached[c]) out.tiles.insert(out.tiles.end(), index.coord(c));
  }
  return out;
}

bool is_tight(const WallProblem& p, const Assignment& assign) {
  OccupancyMap occ = occupied_map(assign, p);
  ReachSet reach = reach_fixpoint(p, occ, gap_seams(occ, p));
  return !reach.tiles.contains(p.terrain.inside_base);
}

}  // namespace wallin
