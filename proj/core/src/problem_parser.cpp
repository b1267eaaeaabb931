#include "wallin/problem_parser.hpp"

#include <charconv>
#include <cctype>
#include <climits>
#include <map>
#include <optional>
#include <sstream>

#include "wallin/errors.hpp"

namespace wallin {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax:
      return "syntax error";
    case ParseErrorKind::UnknownType:
      return "unknown type";
    case ParseErrorKind::UnknownInstance:
      return "unknown instance";
    case ParseErrorKind::DuplicateDeclaration:
      return "duplicate declaration";
    case ParseErrorKind::MissingAnchor:
      return "missing anchor";
    case ParseErrorKind::Incomplete:
      return "incomplete declaration";
  }
  return "error";
}

namespace {

std::string format_parse_message(ParseErrorKind kind, std::size_t line, const std::string& msg) {
  std::ostringstream os;
  if (line > 0) os << "line " << line << ": ";
  os << to_string(kind) << ": " << msg;
  return os.str();
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& message)
    : Error(format_parse_message(kind, line, message)), kind_(kind), line_(line) {}

namespace {

struct Arg {
  bool is_int = false;
  int value = 0;
  std::string id;
};

struct Fact {
  std::string name;
  std::vector<Arg> args;
  std::size_t line = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Fact> facts() {
    std::vector<Fact> out;
    for (;;) {
      skip_blank();
      if (at_end()) break;
      out.push_back(fact());
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseErrorKind::Syntax, fact_line_, msg);
  }

  void skip_blank() {
    while (!at_end()) {
      char c = text_[pos_];
      if (c == '%') {
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_blank();
    if (peek() != c) {
      std::string got = at_end() ? "end of input" : std::string("'") + peek() + "'";
      fail(std::string("expected '") + c + "', got " + got);
    }
    ++pos_;
  }

  std::string identifier() {
    std::size_t start = pos_;
    if (!std::islower(static_cast<unsigned char>(peek()))) fail("expected identifier");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (digits.front() == '+') digits.remove_prefix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || v < INT_MIN || v > INT_MAX) fail("integer out of range");
    return static_cast<int>(v);
  }

  Fact fact() {
    Fact f;
    f.line = fact_line_ = line_;
    f.name = identifier();
    expect('(');
    for (;;) {
      skip_blank();
      Arg a;
      char c = peek();
      if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
        a.is_int = true;
        a.value = integer();
      } else {
        a.id = identifier();
      }
      f.args.push_back(std::move(a));
      skip_blank();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(')');
    expect('.');
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t fact_line_ = 1;
};

// Argument signature per predicate: 'i' = INT, 'n' = ID.
const std::map<std::string, std::string, std::less<>>& signatures() {
  static const std::map<std::string, std::string, std::less<>> sigs = {
      {"buildingType", "n"}, {"width", "ni"},       {"height", "ni"},
      {"leftGap", "ni"},     {"rightGap", "ni"},    {"topGap", "ni"},
      {"bottomGap", "ni"},   {"building", "n"},     {"type", "nn"},
      {"walkableTile", "ii"}, {"buildable", "nii"}, {"insideBase", "ii"},
      {"outsideBase", "ii"}, {"enemyUnitX", "i"},   {"enemyUnitY", "i"},
      {"stage", "in"},       {"place", "nii"},
  };
  return sigs;
}

void check_signature(const Fact& f) {
  auto it = signatures().find(f.name);
  if (it == signatures().end()) {
    throw ParseError(ParseErrorKind::Syntax, f.line, "unknown fact '" + f.name + "'");
  }
  const std::string& sig = it->second;
  if (sig.size() != f.args.size()) {
    throw ParseError(ParseErrorKind::Syntax, f.line,
                     "'" + f.name + "' expects " + std::to_string(sig.size()) + " arguments");
  }
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if ((sig[i] == 'i') != f.args[i].is_int) {
      throw ParseError(ParseErrorKind::Syntax, f.line,
                       "argument " + std::to_string(i + 1) + " of '" + f.name + "' must be " +
                           (sig[i] == 'i' ? "an integer" : "an identifier"));
    }
  }
}

TileCoord coord_arg(const Fact& f, std::size_t first) {
  TileCoord t{f.args[first].value, f.args[first + 1].value};
  if (t.x < 0 || t.y < 0) {
    throw ParseError(ParseErrorKind::Syntax, f.line, "tile coordinates must be non-negative");
  }
  return t;
}

// Records a scalar once; identical repeats are fine, conflicting ones are not.
template <typename T>
void set_once(std::optional<T>& slot, const T& value, const Fact& f, const std::string& what) {
  if (slot && !(*slot == value)) {
    throw ParseError(ParseErrorKind::DuplicateDeclaration, f.line, "conflicting " + what);
  }
  slot = value;
}

struct TypeDraft {
  std::optional<int> width, height, left, right, top, bottom;
};

}  // namespace

ProblemFile parse_problem_file(std::string_view text) {
  std::vector<Fact> facts = Lexer(text).facts();
  for (const auto& f : facts) check_signature(f);

  auto of = [&](std::string_view name) {
    std::vector<const Fact*> out;
    for (const auto& f : facts) {
      if (f.name == name) out.push_back(&f);
    }
    return out;
  };

  ProblemFile file;
  WallProblem& p = file.problem;

  std::map<std::string, TypeDraft> drafts;
  std::map<std::string, std::size_t> type_lines;
  for (const Fact* f : of("buildingType")) {
    const std::string& name = f->args[0].id;
    if (!drafts.emplace(name, TypeDraft{}).second) {
      throw ParseError(ParseErrorKind::DuplicateDeclaration, f->line,
                       "building type '" + name + "' declared twice");
    }
    type_lines[name] = f->line;
  }
  auto draft_for = [&](const Fact& f) -> TypeDraft& {
    auto it = drafts.find(f.args[0].id);
    if (it == drafts.end()) {
      throw ParseError(ParseErrorKind::UnknownType, f.line,
                       "'" + f.name + "' refers to undeclared type '" + f.args[0].id + "'");
    }
    return it->second;
  };
  for (const auto& f : facts) {
    int v = f.args.size() > 1 ? f.args[1].value : 0;
    if (f.name == "width" || f.name == "height") {
      if (v < 1) throw ParseError(ParseErrorKind::Syntax, f.line, f.name + " must be at least 1");
      TypeDraft& d = draft_for(f);
      set_once(f.name == "width" ? d.width : d.height, v, f, f.name + " of '" + f.args[0].id + "'");
    } else if (f.name == "leftGap") {
      set_once(draft_for(f).left, v, f, "leftGap of '" + f.args[0].id + "'");
    } else if (f.name == "rightGap") {
      set_once(draft_for(f).right, v, f, "rightGap of '" + f.args[0].id + "'");
    } else if (f.name == "topGap") {
      set_once(draft_for(f).top, v, f, "topGap of '" + f.args[0].id + "'");
    } else if (f.name == "bottomGap") {
      set_once(draft_for(f).bottom, v, f, "bottomGap of '" + f.args[0].id + "'");
    }
  }
  for (const auto& [name, d] : drafts) {
    if (!d.width || !d.height) {
      throw ParseError(ParseErrorKind::Incomplete, type_lines[name],
                       "building type '" + name + "' lacks width or height");
    }
    p.types.emplace(name, BuildingTypeSpec{name, *d.width, *d.height, d.left.value_or(0),
                                           d.right.value_or(0), d.top.value_or(0),
                                           d.bottom.value_or(0)});
  }

  std::map<std::string, std::size_t> instance_lines;
  for (const Fact* f : of("building")) {
    const std::string& name = f->args[0].id;
    if (!instance_lines.emplace(name, f->line).second) {
      throw ParseError(ParseErrorKind::DuplicateDeclaration, f->line,
                       "building '" + name + "' declared twice");
    }
    p.instances.push_back({name, ""});
  }
  std::map<std::string, std::optional<std::string>> instance_types;
  for (const Fact* f : of("type")) {
    const std::string& inst = f->args[0].id;
    const std::string& type = f->args[1].id;
    if (!p.types.contains(type)) {
      throw ParseError(ParseErrorKind::UnknownType, f->line,
                       "building '" + inst + "' has undeclared type '" + type + "'");
    }
    if (!instance_lines.contains(inst)) {
      throw ParseError(ParseErrorKind::UnknownInstance, f->line,
                       "type() given for undeclared building '" + inst + "'");
    }
    set_once(instance_types[inst], type, *f, "type of '" + inst + "'");
  }
  for (auto& inst : p.instances) {
    auto it = instance_types.find(inst.name);
    if (it == instance_types.end()) {
      throw ParseError(ParseErrorKind::Incomplete, instance_lines[inst.name],
                       "building '" + inst.name + "' has no type");
    }
    inst.type_name = *it->second;
  }

  std::optional<TileCoord> inside, outside;
  std::optional<int> enemy_x, enemy_y;
  std::map<int, std::set<std::string>> stages;
  std::map<std::string, std::optional<TileCoord>> places;
  for (const auto& f : facts) {
    if (f.name == "walkableTile") {
      p.terrain.walkable.insert(coord_arg(f, 0));
    } else if (f.name == "buildable") {
      if (!p.types.contains(f.args[0].id)) {
        throw ParseError(ParseErrorKind::UnknownType, f.line,
                         "buildable position for undeclared type '" + f.args[0].id + "'");
      }
      p.terrain.buildable[f.args[0].id].insert(coord_arg(f, 1));
    } else if (f.name == "insideBase") {
      set_once(inside, coord_arg(f, 0), f, "insideBase");
    } else if (f.name == "outsideBase") {
      set_once(outside, coord_arg(f, 0), f, "outsideBase");
    } else if (f.name == "enemyUnitX" || f.name == "enemyUnitY") {
      if (f.args[0].value <= 0) {
        throw ParseError(ParseErrorKind::Syntax, f.line, f.name + " must be positive");
      }
      set_once(f.name == "enemyUnitX" ? enemy_x : enemy_y, f.args[0].value, f, f.name);
    } else if (f.name == "stage") {
      if (f.args[0].value < 1) {
        throw ParseError(ParseErrorKind::Syntax, f.line, "stage numbers start at 1");
      }
      stages[f.args[0].value].insert(f.args[1].id);
    } else if (f.name == "place") {
      const std::string& inst = f.args[0].id;
      if (!instance_lines.contains(inst)) {
        throw ParseError(ParseErrorKind::UnknownInstance, f.line,
                         "place() for undeclared building '" + inst + "'");
      }
      set_once(places[inst], coord_arg(f, 1), f, "placement of '" + inst + "'");
    }
  }

  if (!inside) throw ParseError(ParseErrorKind::MissingAnchor, 0, "no insideBase fact");
  if (!outside) throw ParseError(ParseErrorKind::MissingAnchor, 0, "no outsideBase fact");
  p.terrain.inside_base = *inside;
  p.terrain.outside_base = *outside;
  p.enemy_width_px = enemy_x.value_or(kDefaultEnemyPx);
  p.enemy_height_px = enemy_y.value_or(kDefaultEnemyPx);

  int expected = 1;
  for (auto& [index, members] : stages) {
    if (index != expected++) {
      throw ParseError(ParseErrorKind::Incomplete, 0,
                       "stage numbers must be contiguous starting at 1");
    }
    p.stages.push_back(std::move(members));
  }
  for (auto& [inst, at] : places) file.placements.placements.emplace(inst, *at);
  return file;
}

WallProblem parse_problem(std::string_view text) { return parse_problem_file(text).problem; }

std::vector<Diagnostic> validate_problem(const WallProblem& p) {
  std::vector<Diagnostic> out;
  const TileSet& walkable = p.terrain.walkable;

  for (const auto& [type_name, origins] : p.terrain.buildable) {
    auto type = p.types.find(type_name);
    if (type == p.types.end()) continue;
    for (TileCoord origin : origins) {
      for (TileCoord t : footprint(type->second, origin)) {
        if (!walkable.contains(t)) {
          std::ostringstream os;
          os << "footprint of " << type_name << " at " << origin << " leaves the walkable window at "
             << t;
          out.push_back({DiagnosticKind::FootprintOutsideWindow, os.str()});
          break;
        }
      }
    }
  }

  for (const auto& inst : p.instances) {
    if (p.candidates(inst).empty()) {
      out.push_back({DiagnosticKind::InfeasibleInstance,
                     "infeasible instance '" + inst.name + "': type '" + inst.type_name +
                         "' has no buildable positions"});
    }
  }

  auto check_anchor = [&](TileCoord a, const char* label) {
    std::ostringstream os;
    if (!walkable.contains(a)) {
      os << label << " " << a << " is not a walkable tile";
      out.push_back({DiagnosticKind::AnchorNotWalkable, os.str()});
      return;
    }
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if ((dx || dy) && walkable.contains({a.x + dx, a.y + dy})) return;
      }
    }
    os << label << " " << a << " has no walkable neighbour";
    out.push_back({DiagnosticKind::AnchorIsolated, os.str()});
  };
  check_anchor(p.terrain.inside_base, "insideBase");
  check_anchor(p.terrain.outside_base, "outsideBase");
  if (p.terrain.inside_base == p.terrain.outside_base) {
    out.push_back({DiagnosticKind::AnchorsCoincide, "insideBase and outsideBase coincide"});
  }
  return out;
}

}  // namespace wallin
