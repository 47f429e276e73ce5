#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <swarm/error.hpp>

#include "swarmctl/commands.hpp"
#include "swarmctl/scenario.hpp"

namespace {

std::vector<double> parse_density_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t consumed = 0;
      const double v = std::stod(item, &consumed);
      if (consumed != item.size()) {
        throw std::invalid_argument(item);
      }
      out.push_back(v);
    } catch (const std::exception&) {
      throw swarmctl::scenario_error("--densities: cannot parse '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formation stability and wireless reliability analysis for a "
               "three-UAV leader-follower swarm"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "Scenario JSON; defaults apply when omitted")
      ->configurable(false);
  app.add_option("--seed", seed, "Override the scenario seed");

  std::string out_path;
  std::string densities_text;
  std::string traj_out;
  std::optional<double> delay_ms;
  std::optional<double> step_ms;
  std::optional<double> horizon_s;
  swarmctl::SweepOptions sweep;

  auto* sc_bound = app.add_subcommand("delay-bound", "Maximum tolerable wireless delay");
  sc_bound->fallthrough();
  sc_bound->add_option("--out", out_path, "Write the report as JSON");

  auto* sc_sim = app.add_subcommand("simulate", "Integrate the delayed error dynamics");
  sc_sim->fallthrough();
  sc_sim->add_option("--out", out_path, "Trajectory CSV path")->required();
  sc_sim->add_option("--delay-ms", delay_ms, "Constant delay override (0 = no delay)");
  sc_sim->add_option("--step-ms", step_ms, "Integration step override");
  sc_sim->add_option("--horizon-s", horizon_s, "Horizon override");

  auto* sc_rel = app.add_subcommand("reliability", "Analytic reliability sweep");
  sc_rel->fallthrough();
  sc_rel->add_option("--out", out_path, "Sweep CSV path")->required();
  sc_rel->add_option("--densities", densities_text, "Comma-separated interferer densities");
  sc_rel->add_option("--spacing-min", sweep.spacing_min, "Smallest spacing target, m");
  sc_rel->add_option("--spacing-max", sweep.spacing_max, "Largest spacing target, m");
  sc_rel->add_option("--spacing-step", sweep.spacing_step, "Spacing grid step, m");
  sc_rel->add_option("--mc-trials", sweep.mc_trials,
                     "Add Monte Carlo columns with this many trials");

  auto* sc_mc = app.add_subcommand("montecarlo", "Reliability sweep with Monte Carlo");
  sc_mc->fallthrough();
  std::uint64_t mc_trials = 100000;
  sc_mc->add_option("--out", out_path, "Sweep CSV path")->required();
  sc_mc->add_option("--densities", densities_text, "Comma-separated interferer densities");
  sc_mc->add_option("--spacing-min", sweep.spacing_min, "Smallest spacing target, m");
  sc_mc->add_option("--spacing-max", sweep.spacing_max, "Largest spacing target, m");
  sc_mc->add_option("--spacing-step", sweep.spacing_step, "Spacing grid step, m");
  sc_mc->add_option("--mc-trials", mc_trials, "Trials per grid point (default 100000)");

  auto* sc_joint = app.add_subcommand("joint", "Coupled control-plus-wireless run");
  sc_joint->fallthrough();
  sc_joint->add_option("--out", out_path, "Per-period CSV path")->required();
  sc_joint->add_option("--traj-out", traj_out, "Also write the trajectory CSV");
  sc_joint->add_option("--step-ms", step_ms, "Integration step override");
  sc_joint->add_option("--horizon-s", horizon_s, "Horizon override");

  CLI11_PARSE(app, argc, argv);

  try {
    const swarmctl::Scenario scenario = config_path.empty()
                                            ? swarmctl::Scenario{}
                                            : swarmctl::load_scenario(config_path);

    if (sc_bound->parsed()) {
      return swarmctl::cmd_delay_bound(scenario, out_path, std::cout);
    }
    if (sc_sim->parsed()) {
      swarmctl::SimulateOptions options;
      options.out_path = out_path;
      options.delay_ms = delay_ms;
      options.step_ms = step_ms;
      options.horizon_s = horizon_s;
      options.seed = seed;
      return swarmctl::cmd_simulate(scenario, options, std::cout);
    }
    if (sc_rel->parsed() || sc_mc->parsed()) {
      sweep.out_path = out_path;
      sweep.seed = seed;
      if (!densities_text.empty()) {
        sweep.densities = parse_density_list(densities_text);
      }
      if (sc_mc->parsed()) {
        sweep.mc_trials = mc_trials;
      }
      return swarmctl::cmd_reliability(scenario, sweep, std::cout);
    }
    if (sc_joint->parsed()) {
      swarmctl::JointOptions options;
      options.out_path = out_path;
      options.trajectory_out_path = traj_out;
      options.step_ms = step_ms;
      options.horizon_s = horizon_s;
      options.seed = seed;
      return swarmctl::cmd_joint(scenario, options, std::cout);
    }
  } catch (const swarmctl::scenario_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const swarm::numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
