#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wallin/grid.hpp"

namespace wallin::cli {

enum class Mode { solve, emit, check, oracle };

struct RunConfig {
  std::string problem_path;
  Mode mode = Mode::solve;
  std::optional<std::size_t> all;  // print up to N solutions
  bool optimize = true;
  ReachMode reach = ReachMode::extended;
  bool render = false;
  std::optional<std::pair<int, int>> enemy;  // width, height in pixels
  unsigned workers = 0;
};

// Exit codes.
inline constexpr int kExitFound = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitInputError = 2;

// Results go to `out`, diagnostics to `err`. Returns the exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// ASCII map over the bounding box of the declared tiles: '.' walkable,
// '#' not walkable, 'O'/'I' anchors, and one glyph per placed instance.
std::string render_ascii(const WallProblem& p, const std::optional<Assignment>& assign);

// Instance glyphs used by render_ascii(): the first letter of the name,
// with a 1-based declaration-order digit appended when letters collide.
std::vector<std::pair<std::string, std::string>> instance_glyphs(const WallProblem& p);

}  // namespace wallin::cli
