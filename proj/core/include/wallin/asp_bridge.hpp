#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wallin/grid.hpp"

namespace wallin {

// Renders the complete logic program for an external ASP solver: facts,
// occupancy and gap rules, reachability rules, one generator rule per
// instance and, optionally, the two #minimize statements. Output is ASCII,
// one statement per line, and independent of the order facts were declared
// in. Extended reach mode adds the squeeze exit rules.
std::string emit_program(const WallProblem& p, bool include_optimization);

// Only the fact statements of a problem, in the order emit_program() writes
// them. Parses back to an equal problem.
std::string emit_facts(const WallProblem& p);

// Keeps the fact lines of an emitted program and drops rules, generators,
// optimization statements and comments.
std::string extract_facts(std::string_view program);

// `place(name,x,y)` terms for an assignment, instances in declaration order.
std::string format_answer_line(const WallProblem& p, const Assignment& a);

enum class AnswerStatus { optimum, satisfiable, unsatisfiable, unknown };

const char* to_string(AnswerStatus status);

struct AnswerParse {
  std::vector<Assignment> assignments;
  std::vector<int> optimization_values;  // from the last "Optimization:" line
  AnswerStatus status = AnswerStatus::unknown;
};

// Reads competition-style solver output ("Answer: N", atom lines,
// "Optimization: ...", status line). Atoms other than place/3 are skipped.
// Throws AnswerFormatError on malformed place terms.
AnswerParse parse_answer(std::string_view text);

}  // namespace wallin
