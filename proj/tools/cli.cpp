#include "cli.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "wallin/asp_bridge.hpp"
#include "wallin/errors.hpp"
#include "wallin/problem_parser.hpp"
#include "wallin/solver.hpp"

namespace wallin::cli {

std::vector<std::pair<std::string, std::string>> instance_glyphs(const WallProblem& p) {
  std::map<char, int> uses;
  for (const auto& inst : p.instances) ++uses[inst.name.front()];
  std::map<char, int> seen;
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& inst : p.instances) {
    char c = inst.name.front();
    std::string glyph(1, c);
    if (uses[c] > 1) glyph += std::to_string(++seen[c]);
    out.emplace_back(inst.name, glyph);
  }
  return out;
}

std::string render_ascii(const WallProblem& p, const std::optional<Assignment>& assign) {
  int lo_x = INT_MAX, lo_y = INT_MAX, hi_x = INT_MIN, hi_y = INT_MIN;
  auto extend = [&](TileCoord t) {
    lo_x = std::min(lo_x, t.x);
    lo_y = std::min(lo_y, t.y);
    hi_x = std::max(hi_x, t.x);
    hi_y = std::max(hi_y, t.y);
  };
  for (TileCoord t : p.terrain.walkable) extend(t);
  for (const auto& [_, origins] : p.terrain.buildable) {
    for (TileCoord t : origins) extend(t);
  }
  extend(p.terrain.inside_base);
  extend(p.terrain.outside_base);

  const int w = hi_x - lo_x + 1;
  const int h = hi_y - lo_y + 1;
  std::vector<std::string> cells(static_cast<std::size_t>(w) * h);
  auto at = [&](TileCoord t) -> std::string* {
    if (t.x < lo_x || t.x > hi_x || t.y < lo_y || t.y > hi_y) return nullptr;
    return &cells[static_cast<std::size_t>(t.y - lo_y) * w + (t.x - lo_x)];
  };
  for (int y = lo_y; y <= hi_y; ++y) {
    for (int x = lo_x; x <= hi_x; ++x) *at({x, y}) = p.terrain.walkable.contains({x, y}) ? "." : "#";
  }
  *at(p.terrain.outside_base) = "O";
  *at(p.terrain.inside_base) = "I";

  std::size_t cell_width = 1;
  if (assign) {
    auto glyphs = instance_glyphs(p);
    for (std::size_t i = 0; i < p.instances.size(); ++i) {
      const auto& inst = p.instances[i];
      auto it = assign->placements.find(inst.name);
      if (it == assign->placements.end()) continue;
      cell_width = std::max(cell_width, glyphs[i].second.size());
      for (TileCoord t : footprint(p.type_of(inst), it->second)) {
        if (auto* c = at(t)) *c = glyphs[i].second;
      }
    }
  }

  std::string out;
  for (int y = 0; y < h; ++y) {
    std::string row;
    for (int x = 0; x < w; ++x) {
      std::string c = cells[static_cast<std::size_t>(y) * w + x];
      c.resize(cell_width, ' ');
      row += c;
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

namespace {

void print_solution(std::ostream& out, const WallProblem& p, const Solution& s, bool optimize) {
  out << format_answer_line(p, s.assignment) << '\n';
  if (optimize) out << "Optimization: " << s.score.vertical_px << ' ' << s.score.horizontal_px << '\n';
}

void print_render(std::ostream& out, const WallProblem& p, const std::optional<Assignment>& a) {
  out << '\n' << render_ascii(p, a);
  if (!a) return;
  auto glyphs = instance_glyphs(p);
  for (std::size_t i = 0; i < glyphs.size(); ++i) {
    if (a->placements.contains(glyphs[i].first)) {
      out << glyphs[i].second << " = " << glyphs[i].first << '\n';
    }
  }
}

int solve(const RunConfig& cfg, const WallProblem& p, std::ostream& out) {
  SearchOptions opts;
  opts.optimize = cfg.optimize;
  opts.workers = cfg.workers;
  const std::size_t count = cfg.all.value_or(1);

  // The first stage that admits a wall decides the reported building set.
  std::vector<std::set<std::string>> stages = p.stages;
  if (stages.empty()) {
    std::set<std::string> everyone;
    for (const auto& inst : p.instances) everyone.insert(inst.name);
    stages.push_back(std::move(everyone));
  } else {
    validate_stages(p);
  }

  for (std::size_t k = 0; k < stages.size(); ++k) {
    WallProblem sub = p.restricted_to(stages[k]);
    auto sols = best_solutions(sub, count, opts);
    if (sols.empty()) continue;
    if (!p.stages.empty()) out << "Stage: " << k + 1 << '\n';
    for (const auto& s : sols) print_solution(out, sub, s, cfg.optimize);
    out << (cfg.optimize ? "OPTIMUM FOUND" : "SATISFIABLE") << '\n';
    if (cfg.render) print_render(out, sub, sols.front().assignment);
    return kExitFound;
  }
  out << "UNSATISFIABLE\n";
  if (cfg.render) print_render(out, p, std::nullopt);
  return kExitInfeasible;
}

int check(const RunConfig& cfg, const ProblemFile& file, std::ostream& out, std::ostream& err) {
  const Assignment& a = file.placements;
  if (a.placements.empty()) {
    err << "error: check mode needs place(ID,X,Y) facts in the problem file\n";
    return kExitInputError;
  }
  std::set<std::string> active;
  for (const auto& [name, _] : a.placements) active.insert(name);
  WallProblem sub = file.problem.restricted_to(active);

  Verdict v = check_assignment(sub, a);
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "buildable: " << yes(v.buildable_ok) << '\n'
      << "overlap-free: " << yes(v.overlap_ok) << '\n'
      << "tight: " << yes(v.tight) << '\n';
  if (v.score) out << "Optimization: " << v.score->vertical_px << ' ' << v.score->horizontal_px << '\n';
  out << (v.valid() ? "VALID" : "INVALID") << '\n';
  if (cfg.render) print_render(out, sub, a);
  return v.valid() ? kExitFound : kExitInfeasible;
}

int oracle(const RunConfig& cfg, const WallProblem& p, std::ostream& out) {
  auto sols = brute_force_oracle(p);
  for (const auto& s : sols) print_solution(out, p, s, cfg.optimize);
  out << (sols.empty() ? "UNSATISFIABLE" : "SATISFIABLE") << '\n';
  if (cfg.render) print_render(out, p, sols.empty() ? std::nullopt : std::optional(sols.front().assignment));
  return sols.empty() ? kExitInfeasible : kExitFound;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.problem_path, std::ios::binary);
  if (!in) {
    err << "error: cannot read problem file '" << cfg.problem_path << "'\n";
    return kExitInputError;
  }
  std::ostringstream text;
  text << in.rdbuf();

  try {
    ProblemFile file = parse_problem_file(text.str());
    WallProblem& p = file.problem;
    p.reach_mode = cfg.reach;
    if (cfg.enemy) {
      p.enemy_width_px = cfg.enemy->first;
      p.enemy_height_px = cfg.enemy->second;
    }
    for (const auto& d : validate_problem(p)) err << "warning: " << d.message << '\n';

    switch (cfg.mode) {
      case Mode::solve:
        return solve(cfg, p, out);
      case Mode::emit:
        out << emit_program(p, cfg.optimize);
        return kExitFound;
      case Mode::check:
        return check(cfg, file, out, err);
      case Mode::oracle:
        return oracle(cfg, p, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace wallin::cli
