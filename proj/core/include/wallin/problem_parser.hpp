#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wallin/grid.hpp"

namespace wallin {

// A problem file may also carry `place(ID,X,Y).` facts describing an
// assignment to check.
struct ProblemFile {
  WallProblem problem;
  Assignment placements;
};

// Parses the fact-file grammar. Throws ParseError.
ProblemFile parse_problem_file(std::string_view text);

// Same as parse_problem_file() but keeps only the problem.
WallProblem parse_problem(std::string_view text);

enum class DiagnosticKind {
  FootprintOutsideWindow,
  InfeasibleInstance,
  AnchorNotWalkable,
  AnchorIsolated,
  AnchorsCoincide,
};

struct Diagnostic {
  DiagnosticKind kind;
  std::string message;
};

// Non-fatal sanity warnings for a parsed problem.
std::vector<Diagnostic> validate_problem(const WallProblem& p);

}  // namespace wallin
