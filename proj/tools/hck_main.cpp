// hck — hypercover checker CLI.
//
//   hck run <scenario.json>
//   hck check <id> --space F --cover F [--map F] [--group F] -K n -L n
//             [--seed s] [--json out]
//   hck fixtures list
//
// Exit codes: 0 pass, 2 validation failure, 3 certificate failure,
// 4 input error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hck/harness.hpp"

namespace {

int emit(const hck::harness::Report& rep, const std::string& json_out) {
  std::string text = rep.json.dump(2);
  if (json_out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(json_out);
    if (!out.good()) {
      std::cerr << "error: cannot write " << json_out << "\n";
      return 4;
    }
    out << text << "\n";
  }
  return rep.exit_code;
}

int exit_code_for(const hck::Error& e) {
  switch (e.kind()) {
    case hck::errc::input:
      return 4;
    case hck::errc::validation:
      return 2;
    case hck::errc::certificate:
      return 3;
    default:
      return 4;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hck — Čech/hypercover homology checker for finite spaces"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string run_json_out;
  CLI::App* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--json", run_json_out, "write the report to a file");

  hck::harness::Scenario sc;
  std::string check_json_out;
  CLI::App* check = app.add_subcommand("check", "run a scenario from flags");
  check->add_option("id", sc.id, "scenario id")->required();
  check->add_option("--space", sc.space_ref, "space fixture name or JSON file");
  check->add_option("--cover", sc.cover_ref,
                    "cover fixture name, JSON file, \"random\", \"random-complete\", or a hypercover"
                    " file for hypercover/retract");
  check->add_option("--map", sc.map_ref, "map fixture name or JSON file");
  check->add_option("--group", sc.group_ref, "group fixture (z1..z6) or JSON file");
  check->add_option("-K", sc.K, "top homology degree checked (default 2)");
  check->add_option("-L", sc.L, "level generation cap (default 4)");
  check->add_option("--seed", sc.seed, "seed for random fixtures");
  check->add_option("--json", check_json_out, "write the report to a file");

  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "fixture corpus");
  bool list = false;
  fixtures_cmd->add_subcommand("list", "list fixture names")->callback([&] { list = true; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      hck::harness::Scenario s = hck::harness::scenario_from_json(hck::io::load_file(scenario_path));
      return emit(hck::harness::run_scenario(s), run_json_out);
    }
    if (check->parsed()) {
      return emit(hck::harness::run_scenario(sc), check_json_out);
    }
    if (fixtures_cmd->parsed()) {
      if (list) {
        std::cout << "spaces:\n";
        for (auto& s : hck::fixtures::space_names()) std::cout << "  " << s << "\n";
        std::cout << "covers (space:cover):\n";
        for (auto& [s, c] : hck::fixtures::cover_names()) std::cout << "  " << s << ":" << c << "\n";
        std::cout << "maps:\n  sixwrap (S1six -> S1min)\n  collapse (point -> S1min)\n";
        std::cout << "hypercovers:\n  refinement (over S1min)\n";
        std::cout << "groups:\n  z1 z2 z3 z4 z5 z6\n";
        std::cout << "scenario ids:\n ";
        for (auto& id : hck::harness::scenario_ids()) std::cout << " " << id;
        std::cout << "\n";
      }
      return 0;
    }
  } catch (const hck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
