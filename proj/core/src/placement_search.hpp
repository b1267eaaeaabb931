#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wallin/grid.hpp"
#include "wallin/solver.hpp"
#include "wallin/tile_index.hpp"

namespace wallin::detail {

// A valid leaf: candidate index per instance (declaration order) and its
// gap totals.
struct Leaf {
  std::vector<int> choice;
  Score score;
};

enum class LeafOrder { canonical, objective };

// Keeps the first `capacity` leaves under the given order.
class LeafCollector {
 public:
  LeafCollector(LeafOrder order, std::optional<std::size_t> capacity);

  LeafCollector empty_like() const;

  void push(Leaf leaf);
  void merge(LeafCollector&& other);
  // Sorted, truncated result.
  std::vector<Leaf> take() &&;

  bool less(const Leaf& a, const Leaf& b) const;

  // Combined score a leaf must not exceed to still be kept; empty while the
  // collector is not full or does not rank by score.
  std::optional<int> score_cutoff() const;

 private:
  LeafOrder order_;
  std::optional<std::size_t> capacity_;
  std::vector<Leaf> heap_;  // max-heap under less() while bounded
};

// Precomputed placement data shared read-only by all workers.
struct SearchModel {
  explicit SearchModel(const WallProblem& p);

  const WallProblem* problem;
  TileIndex index;
  std::vector<const BuildingTypeSpec*> types;             // per instance
  std::vector<std::vector<TileCoord>> origins;            // per instance, (y,x) order
  std::vector<std::vector<std::vector<int>>> cells;       // per instance, per candidate
  // Lowest total an instance's seams can add to the combined score; zero
  // unless some facing gap sum involving it is negative.
  std::vector<int> seam_floor;                            // per instance
  // Candidates get global ids offset[i] + k. conflicts[id] is a bitset over
  // global ids of candidates of other instances sharing a walkable tile.
  std::vector<int> offset;
  std::vector<std::vector<std::uint64_t>> conflicts;

  bool conflict(int inst, int cand, int other, int other_cand) const {
    int a = offset[inst] + cand;
    int b = offset[other] + other_cand;
    return (conflicts[a][b >> 6] >> (b & 63)) & 1U;
  }

  Assignment to_assignment(const std::vector<int>& choice) const;
};

// Runs the generate-and-test search and feeds every valid leaf into `out`.
void run_search(const SearchModel& model, const SearchOptions& opts, LeafCollector& out);

}  // namespace wallin::detail
