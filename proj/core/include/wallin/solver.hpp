#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wallin/grid.hpp"
#include "wallin/occupancy.hpp"

namespace wallin {

struct Score {
  int vertical_px = 0;
  int horizontal_px = 0;

  int combined() const noexcept { return vertical_px + horizontal_px; }

  static Score from(const GapTotals& t) { return {t.vertical_px, t.horizontal_px}; }

  friend bool operator==(const Score&, const Score&) = default;
};

struct Solution {
  Assignment assignment;
  Score score;
  int stage_index = 1;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct Verdict {
  bool buildable_ok = false;
  bool overlap_ok = false;
  bool tight = false;
  std::optional<Score> score;  // present iff all three checks pass

  bool valid() const noexcept { return score.has_value(); }
};

struct SearchOptions {
  // Drop candidates that collide with a placed building as soon as it is
  // placed instead of rejecting the collision at the leaf.
  bool overlap_cut = true;
  // Branch on the instance with the fewest remaining candidates.
  bool order_by_domain = true;
  // Require every open outside-to-inside path to be hit by some remaining
  // building, and give up on a branch once even blocking every remaining
  // candidate tile leaves such a path.
  bool path_cut = true;
  // Worker threads for the top-level branches; 0 picks the hardware count.
  unsigned workers = 0;
  // When false, "best" means canonically first instead of lowest score.
  bool optimize = true;
};

// Canonical assignment order: instances in declaration order, each position
// compared (y, x).
bool canonical_less(const WallProblem& p, const Assignment& a, const Assignment& b);

// Objective order: combined score, then vertical, then horizontal, then
// canonical order.
bool score_less(const WallProblem& p, const Solution& a, const Solution& b);

// Throws AssignmentError unless `assign` places exactly the declared
// instances.
Verdict check_assignment(const WallProblem& p, const Assignment& assign);

// Every valid total assignment in canonical order, truncated to `limit`.
// An empty result means no wall exists with this building set.
std::vector<Solution> enumerate_valid(const WallProblem& p,
                                      std::optional<std::size_t> limit = std::nullopt,
                                      const SearchOptions& opts = {});

// Up to `count` valid solutions, ordered by score_less (or canonically when
// opts.optimize is false).
std::vector<Solution> best_solutions(const WallProblem& p, std::size_t count,
                                     const SearchOptions& opts = {});

std::optional<Solution> solve_optimal(const WallProblem& p, const SearchOptions& opts = {});

// Tries each stage in turn and returns the first that admits a wall, tagged
// with its 1-based stage index. Throws StageError on malformed stages.
std::optional<Solution> solve_incremental(const WallProblem& p, const SearchOptions& opts = {});

// Checks the stage list: known instances, nested, last stage complete.
void validate_stages(const WallProblem& p);

inline constexpr std::size_t kOracleProductLimit = 1'000'000;

// Exhaustive Cartesian enumeration with a naive round-robin fixpoint. Slow
// and independent of the search above. Throws TooLargeError when the
// product of candidate counts exceeds kOracleProductLimit.
std::vector<Solution> brute_force_oracle(const WallProblem& p);

}  // namespace wallin
