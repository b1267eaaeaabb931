#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  using wallin::cli::Mode;

  CLI::App app{"Find building placements that wall off a chokepoint."};
  wallin::cli::RunConfig cfg;

  std::string mode = "solve";
  std::string reach = "extended";
  std::string enemy;
  std::size_t all = 0;
  bool no_optimize = false;

  app.add_option("--problem", cfg.problem_path, "Problem fact file")->required();
  app.add_option("--mode", mode, "solve | emit | check | oracle")
      ->check(CLI::IsMember({"solve", "emit", "check", "oracle"}));
  app.add_option("--all", all, "Print up to N solutions")->check(CLI::PositiveNumber);
  app.add_flag("--no-optimize", no_optimize, "Accept the first valid wall instead of the best");
  app.add_option("--reach", reach, "Squeeze semantics: literal | extended")
      ->check(CLI::IsMember({"literal", "extended"}));
  app.add_flag("--render", cfg.render, "Append an ASCII map");
  app.add_option("--enemy", enemy, "Enemy unit size in pixels, WxH (default 16x16)");
  app.add_option("--workers", cfg.workers, "Search threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return wallin::cli::kExitInputError;
  }

  if (mode == "emit") cfg.mode = Mode::emit;
  if (mode == "check") cfg.mode = Mode::check;
  if (mode == "oracle") cfg.mode = Mode::oracle;
  if (all > 0) cfg.all = all;
  cfg.optimize = !no_optimize;
  cfg.reach = reach == "literal" ? wallin::ReachMode::literal : wallin::ReachMode::extended;
  if (!enemy.empty()) {
    std::smatch m;
    static const std::regex size_re(R"(([1-9][0-9]*)[xX]([1-9][0-9]*))");
    if (!std::regex_match(enemy, m, size_re)) {
      std::cerr << "error: --enemy expects WxH with positive integers, got '" << enemy << "'\n";
      return wallin::cli::kExitInputError;
    }
    cfg.enemy = {std::stoi(m[1]), std::stoi(m[2])};
  }

  return wallin::cli::run(cfg, std::cout, std::cerr);
}
