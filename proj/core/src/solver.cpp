#include "wallin/solver.hpp"

#include <algorithm>

#include "placement_search.hpp"
#include "wallin/errors.hpp"
#include "wallin/reachability.hpp"

namespace wallin {

bool canonical_less(const WallProblem& p, const Assignment& a, const Assignment& b) {
  for (const auto& inst : p.instances) {
    auto ia = a.placements.find(inst.name);
    auto ib = b.placements.find(inst.name);
    bool ha = ia != a.placements.end();
    bool hb = ib != b.placements.end();
    if (ha != hb) return !ha;
    if (ha && ia->second != ib->second) return ia->second < ib->second;
  }
  return false;
}

bool score_less(const WallProblem& p, const Solution& a, const Solution& b) {
  if (a.score.combined() != b.score.combined()) return a.score.combined() < b.score.combined();
  if (a.score.vertical_px != b.score.vertical_px) return a.score.vertical_px < b.score.vertical_px;
  if (a.score.horizontal_px != b.score.horizontal_px) {
    return a.score.horizontal_px < b.score.horizontal_px;
  }
  return canonical_less(p, a.assignment, b.assignment);
}

Verdict check_assignment(const WallProblem& p, const Assignment& assign) {
  for (const auto& [name, _] : assign.placements) {
    if (!p.find_instance(name)) throw AssignmentError("unknown instance '" + name + "'");
  }
  for (const auto& inst : p.instances) {
    if (!assign.placements.contains(inst.name)) {
      throw AssignmentError("instance '" + inst.name + "' is not placed");
    }
  }

  Verdict v;
  v.buildable_ok = std::all_of(p.instances.begin(), p.instances.end(), [&](const BuildingInstance& b) {
    return p.candidates(b).contains(assign.placements.at(b.name));
  });

  OccupancyMap occ;
  try {
    occ = occupied_map(assign, p);
    v.overlap_ok = true;
  } catch (const OverlapError&) {
    return v;
  }
  auto seams = gap_seams(occ, p);
  v.tight = !reach_fixpoint(p, occ, seams).tiles.contains(p.terrain.inside_base);
  if (v.buildable_ok && v.tight) v.score = Score::from(gap_totals(seams));
  return v;
}

namespace {

std::vector<Solution> run(const WallProblem& p, detail::LeafOrder order,
                          std::optional<std::size_t> limit, const SearchOptions& opts) {
  detail::SearchModel model(p);
  detail::LeafCollector collector(order, limit);
  detail::run_search(model, opts, collector);
  std::vector<Solution> out;
  for (auto& leaf : std::move(collector).take()) {
    out.push_back({model.to_assignment(leaf.choice), leaf.score, 1});
  }
  return out;
}

}  // namespace

std::vector<Solution> enumerate_valid(const WallProblem& p, std::optional<std::size_t> limit,
                                      const SearchOptions& opts) {
  return run(p, detail::LeafOrder::canonical, limit, opts);
}

std::vector<Solution> best_solutions(const WallProblem& p, std::size_t count,
                                     const SearchOptions& opts) {
  return run(p, opts.optimize ? detail::LeafOrder::objective : detail::LeafOrder::canonical, count,
             opts);
}

std::optional<Solution> solve_optimal(const WallProblem& p, const SearchOptions& opts) {
  auto best = best_solutions(p, 1, opts);
  if (best.empty()) return std::nullopt;
  return std::move(best.front());
}

void validate_stages(const WallProblem& p) {
  std::set<std::string> all;
  for (const auto& inst : p.instances) all.insert(inst.name);
  for (std::size_t k = 0; k < p.stages.size(); ++k) {
    for (const auto& name : p.stages[k]) {
      if (!all.contains(name)) {
        throw StageError("stage " + std::to_string(k + 1) + " names unknown instance '" + name + "'");
      }
    }
    if (k > 0 && !std::includes(p.stages[k].begin(), p.stages[k].end(), p.stages[k - 1].begin(),
                                p.stages[k - 1].end())) {
      throw StageError("stage " + std::to_string(k + 1) + " does not contain stage " +
                       std::to_string(k));
    }
  }
  if (!p.stages.empty() && p.stages.back() != all) {
    throw StageError("the last stage must hold every instance");
  }
}

std::optional<Solution> solve_incremental(const WallProblem& p, const SearchOptions& opts) {
  if (p.stages.empty()) return solve_optimal(p, opts);
  validate_stages(p);
  for (std::size_t k = 0; k < p.stages.size(); ++k) {
    WallProblem sub = p.restricted_to(p.stages[k]);
    if (auto sol = solve_optimal(sub, opts)) {
      sol->stage_index = static_cast<int>(k + 1);
      return sol;
    }
  }
  return std::nullopt;
}

}  // namespace wallin
