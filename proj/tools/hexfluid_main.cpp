#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hexfluid/runner.hpp"

namespace {

struct RunArgs {
  std::string scenario;
  std::string out_dir;
  std::int64_t samples = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int rings = -1;
  double map_res = -1.0;
};

void apply_overrides(hexfluid::Scenario& s, const RunArgs& args) {
  if (args.samples >= 0) s.samples = args.samples;
  if (args.seed_set) s.seed = args.seed;
  if (args.rings >= 0) s.rings = args.rings;
  if (args.map_res > 0.0) s.map_resolution = args.map_res;
}

void print_warnings(const hexfluid::Scenario& s) {
  for (const std::string& w : hexfluid::scenario_warnings(s))
    std::cerr << "warning: " << w << '\n';
}

int do_run(const RunArgs& args) {
  hexfluid::Scenario s = hexfluid::load_scenario(args.scenario);
  apply_overrides(s, args);
  hexfluid::validate_scenario(s);
  print_warnings(s);
  const hexfluid::RunSummary summary = hexfluid::run(s, args.out_dir);
  std::cout << "scenario:      " << summary.scenario_name << '\n'
            << "samples:       " << summary.samples << '\n'
            << "seed:          " << summary.seed << '\n'
            << "ks distance:   " << summary.ks << '\n'
            << "median (sim):  " << summary.quantiles_simulated_db[2] << " dB\n"
            << "median (ana):  " << summary.quantiles_analytic_db[2] << " dB\n"
            << "map mean |d|:  " << summary.map_stats.mean_abs << " dB\n"
            << "wall seconds:  " << summary.wall_seconds << '\n'
            << "outputs:       " << args.out_dir << '\n';
  return 0;
}

int do_validate(const std::string& scenario) {
  const hexfluid::Scenario s = hexfluid::load_scenario(scenario);
  print_warnings(s);
  std::cout << hexfluid::scenario_to_json(s).dump(2) << '\n';
  return 0;
}

int do_list_presets() {
  for (const std::string& name : hexfluid::preset_names()) {
    const hexfluid::Scenario s = hexfluid::preset_scenario(name);
    std::cout << name << "  theta3dB=" << hexfluid::rad2deg(s.ant.theta3db)
              << " phi3dB=" << hexfluid::rad2deg(s.ant.phi3db)
              << " phiTilt=" << hexfluid::rad2deg(s.ant.phi_tilt) << " isd=" << s.isd
              << " height=" << s.ant.height_m << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tri-sector hexagonal network SINR: Monte Carlo vs fluid closed form"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run_cmd = app.add_subcommand("run", "Simulate a scenario and write CSV/JSON outputs");
  run_cmd->add_option("--scenario", run_args.scenario, "Config file path or preset name")
      ->required();
  run_cmd->add_option("--out", run_args.out_dir, "Output directory")->required();
  run_cmd->add_option("--samples", run_args.samples, "Override sample count");
  run_cmd->add_option("--seed", run_args.seed, "Override RNG seed")
      ->each([&](const std::string&) { run_args.seed_set = true; });
  run_cmd->add_option("--rings", run_args.rings, "Override interferer ring count");
  run_cmd->add_option("--map-res", run_args.map_res, "Override map resolution (m/pixel)");

  std::string validate_scenario_arg;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Parse and validate a scenario, print the resolved config");
  validate_cmd->add_option("--scenario", validate_scenario_arg, "Config file path or preset name")
      ->required();

  CLI::App* list_cmd = app.add_subcommand("list-presets", "List built-in scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return do_run(run_args);
    if (validate_cmd->parsed()) return do_validate(validate_scenario_arg);
    if (list_cmd->parsed()) return do_list_presets();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
