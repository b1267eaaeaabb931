#include "wallin/asp_bridge.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "wallin/errors.hpp"

namespace wallin {

namespace {

constexpr std::string_view kOccupancyRules[] = {
    ":- occupiedBy(B1,X,Y), occupiedBy(B2,X,Y), B1!=B2.",
    "occupiedBy(B,X2,Y2) :- place(B,X1,Y1), type(B,BT), width(BT,Z), height(BT,Q), "
    "X2 >= X1, X2 < X1+Z, Y2 >= Y1, Y2 < Y1+Q, walkableTile(X2,Y2).",
};

constexpr std::string_view kGapRules[] = {
    "verticalGap(X1,Y1,X2,Y2,G) :- occupiedBy(B1,X1,Y1), occupiedBy(B2,X2,Y2), B1 != B2, "
    "X1=X2, Y1=Y2-1, G=S1+S2, type(B1,T1), type(B2,T2), bottomGap(T1,S1), topGap(T2,S2).",
    "verticalGap(X1,Y1,X2,Y2,G) :- occupiedBy(B1,X1,Y1), occupiedBy(B2,X2,Y2), B1 != B2, "
    "X1=X2, Y1=Y2+1, G=S1+S2, type(B1,T1), type(B2,T2), bottomGap(T2,S2), topGap(T1,S1).",
    "horizontalGap(X1,Y1,X2,Y2,G) :- occupiedBy(B1,X1,Y1), occupiedBy(B2,X2,Y2), B1 != B2, "
    "X1=X2-1, Y1=Y2, G=S1+S2, type(B1,T1), type(B2,T2), rightGap(T1,S1), leftGap(T2,S2).",
    "horizontalGap(X1,Y1,X2,Y2,G) :- occupiedBy(B1,X1,Y1), occupiedBy(B2,X2,Y2), B1 != B2, "
    "X1=X2+1, Y1=Y2, G=S1+S2, type(B1,T1), type(B2,T2), rightGap(T2,S2), leftGap(T1,S1).",
};

constexpr std::string_view kReachRules[] = {
    ":- insideBase(X2,Y2), outsideBase(X1,Y1), canReach(X2,Y2).",
    "blocked(X,Y) :- occupiedBy(B,X,Y), building(B), walkableTile(X,Y).",
    "canReach(X,Y) :- outsideBase(X,Y).",
    "canReach(X2,Y) :- canReach(X1,Y), X1=X2+1, walkableTile(X1,Y), walkableTile(X2,Y), "
    "not blocked(X1,Y), not blocked(X2,Y).",
    "canReach(X2,Y) :- canReach(X1,Y), X1=X2-1, walkableTile(X1,Y), walkableTile(X2,Y), "
    "not blocked(X1,Y), not blocked(X2,Y).",
    "canReach(X,Y2) :- canReach(X,Y1), Y1=Y2+1, walkableTile(X,Y1), walkableTile(X,Y2), "
    "not blocked(X,Y1), not blocked(X,Y2).",
    "canReach(X,Y2) :- canReach(X,Y1), Y1=Y2-1, walkableTile(X,Y1), walkableTile(X,Y2), "
    "not blocked(X,Y1), not blocked(X,Y2).",
    "canReach(X2,Y2) :- canReach(X1,Y1), X1=X2+1, Y1=Y2+1, walkableTile(X1,Y1), "
    "walkableTile(X2,Y2), not blocked(X1,Y1), not blocked(X2,Y2).",
    "canReach(X2,Y2) :- canReach(X1,Y1), X1=X2-1, Y1=Y2+1, walkableTile(X1,Y1), "
    "walkableTile(X2,Y2), not blocked(X1,Y1), not blocked(X2,Y2).",
    "canReach(X2,Y2) :- canReach(X1,Y1), X1=X2+1, Y1=Y2-1, walkableTile(X1,Y1), "
    "walkableTile(X2,Y2), not blocked(X1,Y1), not blocked(X2,Y2).",
    "canReach(X2,Y2) :- canReach(X1,Y1), X1=X2-1, Y1=Y2-1, walkableTile(X1,Y1), "
    "walkableTile(X2,Y2), not blocked(X1,Y1), not blocked(X2,Y2).",
    "canReach(X1,Y1) :- horizontalGap(X1,Y1,X2,Y1,G), G >= S, X2=X1+1, canReach(X1,Y3), "
    "Y3=Y1+1, enemyUnitX(S).",
    "canReach(X1,Y1) :- horizontalGap(X1,Y1,X2,Y1,G), G >= S, X2=X1-1, canReach(X1,Y3), "
    "Y3=Y1+1, enemyUnitX(S).",
    "canReach(X1,Y1) :- horizontalGap(X1,Y1,X2,Y1,G), G >= S, X2=X1+1, canReach(X1,Y3), "
    "Y3=Y1-1, enemyUnitX(S).",
    "canReach(X1,Y1) :- horizontalGap(X1,Y1,X2,Y1,G), G >= S, X2=X1-1, canReach(X1,Y3), "
    "Y3=Y1-1, enemyUnitX(S).",
    "canReach(X1,Y1) :- verticalGap(X1,Y1,X1,Y2,G), G >= S, Y2=Y1+1, canReach(X3,Y1), "
    "X3=X1-1, enemyUnitY(S).",
    "canReach(X1,Y1) :- verticalGap(X1,Y1,X1,Y2,G), G >= S, Y2=Y1-1, canReach(X3,Y1), "
    "X3=X1-1, enemyUnitY(S).",
    "canReach(X1,Y1) :- verticalGap(X1,Y1,X1,Y2,G), G >= S, Y2=Y1+1, canReach(X3,Y1), "
    "X3=X1+1, enemyUnitY(S).",
    "canReach(X1,Y1) :- verticalGap(X1,Y1,X1,Y2,G), G >= S, Y2=Y1-1, canReach(X3,Y1), "
    "X3=X1+1, enemyUnitY(S).",
};

constexpr std::string_view kExitRules[] = {
    "canReach(X1,Y3) :- horizontalGap(X1,Y1,X2,Y1,G), G >= S, canReach(X1,Y1), Y3=Y1+1, "
    "walkableTile(X1,Y3), not blocked(X1,Y3), enemyUnitX(S).",
    "canReach(X1,Y3) :- horizontalGap(X1,Y1,X2,Y1,G), G >= S, canReach(X1,Y1), Y3=Y1-1, "
    "walkableTile(X1,Y3), not blocked(X1,Y3), enemyUnitX(S).",
    "canReach(X3,Y1) :- verticalGap(X1,Y1,X1,Y2,G), G >= S, canReach(X1,Y1), X3=X1+1, "
    "walkableTile(X3,Y1), not blocked(X3,Y1), enemyUnitY(S).",
    "canReach(X3,Y1) :- verticalGap(X1,Y1,X1,Y2,G), G >= S, canReach(X1,Y1), X3=X1-1, "
    "walkableTile(X3,Y1), not blocked(X3,Y1), enemyUnitY(S).",
};

constexpr std::string_view kMinimize[] = {
    "#minimize [verticalGap(X1,Y1,X2,Y2,G) = G ].",
    "#minimize [horizontalGap(X1,Y1,X2,Y2,G) = G ].",
};

std::vector<BuildingInstance> instances_by_name(const WallProblem& p) {
  std::vector<BuildingInstance> sorted = p.instances;
  std::sort(sorted.begin(), sorted.end(),
            [](const BuildingInstance& a, const BuildingInstance& b) { return a.name < b.name; });
  return sorted;
}

void type_facts(std::ostream& os, const WallProblem& p) {
  for (const auto& [name, t] : p.types) {
    os << "buildingType(" << name << ").\n"
       << "width(" << name << ',' << t.width << ").\n"
       << "height(" << name << ',' << t.height << ").\n"
       << "leftGap(" << name << ',' << t.left_gap << ").\n"
       << "rightGap(" << name << ',' << t.right_gap << ").\n"
       << "topGap(" << name << ',' << t.top_gap << ").\n"
       << "bottomGap(" << name << ',' << t.bottom_gap << ").\n";
  }
}

void instance_facts(std::ostream& os, const WallProblem& p) {
  for (const auto& inst : instances_by_name(p)) {
    os << "building(" << inst.name << ").\n"
       << "type(" << inst.name << ',' << inst.type_name << ").\n";
  }
  for (std::size_t k = 0; k < p.stages.size(); ++k) {
    for (const auto& name : p.stages[k]) os << "stage(" << k + 1 << ',' << name << ").\n";
  }
}

void terrain_facts(std::ostream& os, const WallProblem& p) {
  for (TileCoord t : p.terrain.walkable) os << "walkableTile(" << t.x << ',' << t.y << ").\n";
  for (const auto& [type, origins] : p.terrain.buildable) {
    for (TileCoord t : origins) os << "buildable(" << type << ',' << t.x << ',' << t.y << ").\n";
  }
}

void anchor_facts(std::ostream& os, const WallProblem& p) {
  os << "insideBase(" << p.terrain.inside_base.x << ',' << p.terrain.inside_base.y << ").\n"
     << "outsideBase(" << p.terrain.outside_base.x << ',' << p.terrain.outside_base.y << ").\n";
}

void enemy_facts(std::ostream& os, const WallProblem& p) {
  os << "enemyUnitX(" << p.enemy_width_px << ").\n"
     << "enemyUnitY(" << p.enemy_height_px << ").\n";
}

template <std::size_t N>
void lines(std::ostream& os, const std::string_view (&rules)[N]) {
  for (auto r : rules) os << r << '\n';
}

}  // namespace

std::string emit_program(const WallProblem& p, bool include_optimization) {
  std::ostringstream os;
  os << "% building types\n";
  type_facts(os, p);
  os << "% building instances\n";
  instance_facts(os, p);
  os << "% no two buildings on the same tile\n";
  lines(os, kOccupancyRules);
  os << "% gaps between adjacent tiles of different buildings\n";
  lines(os, kGapRules);
  os << "% terrain\n";
  terrain_facts(os, p);
  anchor_facts(os, p);
  os << "% reachability\n";
  lines(os, kReachRules);
  if (p.reach_mode == ReachMode::extended) {
    os << "% leaving a squeezed seam\n";
    lines(os, kExitRules);
  }
  enemy_facts(os, p);
  os << "% generators\n";
  for (const auto& inst : instances_by_name(p)) {
    os << "1[place(" << inst.name << ",X,Y) : buildable(" << inst.type_name << ",X,Y)]1.\n";
  }
  if (include_optimization) {
    os << "% optimization\n";
    lines(os, kMinimize);
  }
  return os.str();
}

std::string emit_facts(const WallProblem& p) {
  std::ostringstream os;
  type_facts(os, p);
  instance_facts(os, p);
  terrain_facts(os, p);
  anchor_facts(os, p);
  enemy_facts(os, p);
  return os.str();
}

std::string extract_facts(std::string_view program) {
  std::string out;
  std::size_t pos = 0;
  while (pos < program.size()) {
    std::size_t end = program.find('\n', pos);
    if (end == std::string_view::npos) end = program.size();
    std::string_view line = program.substr(pos, end - pos);
    if (!line.empty() && std::islower(static_cast<unsigned char>(line.front())) &&
        line.find(":-") == std::string_view::npos) {
      out.append(line);
      out.push_back('\n');
    }
    pos = end + 1;
  }
  return out;
}

std::string format_answer_line(const WallProblem& p, const Assignment& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& inst : p.instances) {
    auto it = a.placements.find(inst.name);
    if (it == a.placements.end()) continue;
    if (!first) os << ' ';
    first = false;
    os << "place(" << inst.name << ',' << it->second.x << ',' << it->second.y << ')';
  }
  return os.str();
}

const char* to_string(AnswerStatus status) {
  switch (status) {
    case AnswerStatus::optimum:
      return "OPTIMUM FOUND";
    case AnswerStatus::satisfiable:
      return "SATISFIABLE";
    case AnswerStatus::unsatisfiable:
      return "UNSATISFIABLE";
    case AnswerStatus::unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

// Splits an atom line on whitespace outside parentheses.
std::vector<std::string_view> atoms(std::string_view line) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = std::string_view::npos;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    char c = i < line.size() ? line[i] : ' ';
    bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
    if (space && (depth == 0 || i == line.size())) {
      if (start != std::string_view::npos) out.push_back(line.substr(start, i - start));
      start = std::string_view::npos;
      continue;
    }
    if (start == std::string_view::npos) start = i;
    if (c == '(') ++depth;
    if (c == ')') --depth;
  }
  return out;
}

bool is_place_atom(std::string_view atom) { return atom.starts_with("place("); }

void add_place(std::string_view atom, Assignment& into) {
  auto fail = [&](const std::string& why) {
    throw AnswerFormatError("malformed place term '" + std::string(atom) + "': " + why);
  };
  if (atom.back() == '.') atom.remove_suffix(1);
  if (atom.back() != ')') fail("missing ')'");
  std::string_view body = atom.substr(6, atom.size() - 7);
  std::vector<std::string_view> parts;
  for (std::size_t pos = 0;;) {
    std::size_t comma = body.find(',', pos);
    parts.push_back(trim(body.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (parts.size() != 3) fail("expected 3 arguments");
  if (parts[0].empty() || !std::islower(static_cast<unsigned char>(parts[0].front())) ||
      !std::all_of(parts[0].begin(), parts[0].end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      })) {
    fail("bad building name");
  }
  TileCoord t;
  if (!parse_int(parts[1], t.x) || !parse_int(parts[2], t.y)) fail("non-integer coordinate");
  if (!into.placements.emplace(std::string(parts[0]), t).second) {
    fail("building placed twice in one answer");
  }
}

}  // namespace

AnswerParse parse_answer(std::string_view text) {
  AnswerParse out;
  bool expecting_answer = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;

    if (line.starts_with("Answer:")) {
      expecting_answer = true;
      continue;
    }
    if (line.starts_with("Optimization:")) {
      out.optimization_values.clear();
      std::string_view rest = line.substr(13);
      for (auto tok : atoms(rest)) {
        int v = 0;
        if (!parse_int(tok, v)) {
          throw AnswerFormatError("non-integer optimization value '" + std::string(tok) + "'");
        }
        out.optimization_values.push_back(v);
      }
      continue;
    }
    if (line == "OPTIMUM FOUND") {
      out.status = AnswerStatus::optimum;
      continue;
    }
    if (line == "SATISFIABLE") {
      out.status = AnswerStatus::satisfiable;
      continue;
    }
    if (line == "UNSATISFIABLE") {
      out.status = AnswerStatus::unsatisfiable;
      continue;
    }
    if (line == "UNKNOWN") {
      out.status = AnswerStatus::unknown;
      continue;
    }

    auto terms = atoms(line);
    bool has_place = std::any_of(terms.begin(), terms.end(), is_place_atom);
    if (!expecting_answer && !has_place) continue;
    expecting_answer = false;
    Assignment a;
    for (auto atom : terms) {
      if (is_place_atom(atom)) add_place(atom, a);
    }
    out.assignments.push_back(std::move(a));
  }
  if (out.status == AnswerStatus::unsatisfiable && !out.assignments.empty()) {
    throw AnswerFormatError("answers reported together with UNSATISFIABLE");
  }
  return out;
}

}  // namespace wallin
