#include "swarmctl/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include <swarm/swarm.hpp>

#include "swarmctl/csv.hpp"

namespace swarmctl {

namespace {

// Substream tags keep the initial-state, link-delay and radio draws of one
// seed independent of each other.
constexpr std::uint64_t kInitStream = 0x696E6974ull;
constexpr std::uint64_t kDelayStream = 0x64656C61ull;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file " + path);
  }
  out << text;
}

double lyapunov_residual(const swarm::DelayBound& bound, const swarm::SystemMatrices& mats) {
  const swarm::Mat4 a = mats.m1 + mats.m2;
  const swarm::Mat4 res =
      bound.c * a + a.transpose() * bound.c + swarm::Mat4::Identity();
  return res.cwiseAbs().maxCoeff();
}

}  // namespace

swarm::SwarmState initial_state_from_seed(std::uint64_t seed,
                                          const swarm::FormationTargets& targets) {
  swarm::Rng rng(swarm::derive_seed(seed, kInitStream));
  swarm::AxisErrors e;
  for (int i = 0; i < 4; ++i) {
    e.x(i) = rng.uniform(-5.0, 5.0);
  }
  for (int i = 0; i < 4; ++i) {
    e.y(i) = rng.uniform(-5.0, 5.0);
  }
  return swarm::reconstruct_state(e, targets);
}

int cmd_delay_bound(const Scenario& scenario, const std::string& out_path,
                    std::ostream& report) {
  const swarm::SystemMatrices mats = swarm::build_error_matrices(scenario.gains);
  const swarm::DelayBound bound = swarm::delay_bound(mats, scenario.k);
  const double residual = lyapunov_residual(bound, mats);

  report << "tau_max_ms: " << format_double(bound.tau_max * 1e3) << "\n"
         << "lambda_max: " << format_double(bound.lambda_max) << "\n"
         << "lyapunov_residual: " << format_double(residual) << "\n"
         << "k: " << format_double(bound.k) << "\n";

  if (!out_path.empty()) {
    nlohmann::json j;
    j["tau_max_ms"] = bound.tau_max * 1e3;
    j["lambda_max"] = bound.lambda_max;
    j["lyapunov_residual"] = residual;
    j["k"] = bound.k;
    write_text(out_path, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_simulate(const Scenario& scenario, const SimulateOptions& options,
                 std::ostream& report) {
  const std::uint64_t seed = options.seed.value_or(scenario.seed);
  const double step = options.step_ms ? *options.step_ms * 1e-3 : scenario.sim.step_s;
  const double horizon = options.horizon_s.value_or(scenario.sim.horizon_s);

  swarm::DelayProcess delay;
  double tau_max_ms = 0.0;
  if (options.delay_ms) {
    delay = swarm::DelayProcess::constant(*options.delay_ms * 1e-3);
    tau_max_ms = *options.delay_ms;
  } else {
    const double tau_bound =
        swarm::formation_delay_requirement(scenario.gains, scenario.k);
    delay = swarm::DelayProcess::uniform_resampled(
        tau_bound, scenario.sim.delay_resample_s, swarm::derive_seed(seed, kDelayStream));
    tau_max_ms = tau_bound * 1e3;
  }

  const swarm::SwarmState initial = initial_state_from_seed(seed, scenario.targets);
  swarm::Trajectory traj = swarm::integrate_dde(initial, scenario.targets, scenario.gains,
                                                delay, step, horizon);
  traj.scenario_hash = scenario_hash(scenario);
  if (!options.out_path.empty()) {
    write_trajectory_csv(traj, options.out_path);
  }

  const swarm::ConvergenceReport conv = swarm::convergence_metrics(traj, 1e-2, 2.0);
  nlohmann::json j;
  j["status"] = traj.status == swarm::RunStatus::kCompleted ? "completed" : "diverged";
  j["converged"] = conv.converged;
  j["settle_time_s"] = conv.converged ? conv.settle_time : -1.0;
  j["max_overshoot"] = conv.max_overshoot;
  j["tau_max_ms"] = tau_max_ms;
  j["seed"] = seed;
  report << j.dump(2) << "\n";

  return traj.status == swarm::RunStatus::kCompleted && conv.converged ? 0 : 2;
}

int cmd_reliability(const Scenario& scenario, const SweepOptions& options,
                    std::ostream& report) {
  if (options.densities.empty()) {
    throw std::invalid_argument("reliability sweep: need at least one density");
  }
  if (!(options.spacing_step > 0.0) || options.spacing_max < options.spacing_min) {
    throw std::invalid_argument("reliability sweep: bad spacing grid");
  }

  const std::uint64_t seed = options.seed.value_or(scenario.seed);
  const double tau_req = swarm::formation_delay_requirement(scenario.gains, scenario.k);

  std::vector<double> densities = options.densities;
  std::sort(densities.begin(), densities.end());
  const auto n_spacing = static_cast<std::size_t>(
      std::floor((options.spacing_max - options.spacing_min) / options.spacing_step + 1e-9));

  std::vector<ReliabilityRow> rows;
  std::size_t point_index = 0;
  for (const double density : densities) {
    swarm::WirelessParams params = scenario.radio.to_wireless_params();
    params.density_per_m2 = density;
    for (std::size_t i = 0; i <= n_spacing; ++i, ++point_index) {
      const double spacing = options.spacing_min + static_cast<double>(i) * options.spacing_step;
      const auto budget = swarm::LinkBudget::for_required_delay(spacing, tau_req, params);

      ReliabilityRow row;
      row.density = density;
      row.spacing = spacing;
      row.analytic = swarm::link_reliability(budget, params).value;
      if (options.mc_trials > 0) {
        const auto mc = swarm::mc_reliability(budget, params, options.mc_trials,
                                              swarm::derive_seed(seed, point_index));
        row.has_mc = true;
        row.mc = mc.value;
        row.mc_ci95 = mc.ci_halfwidth_95;
      }
      rows.push_back(row);
    }
  }

  write_reliability_csv(rows, options.out_path);

  nlohmann::json j;
  j["tau_req_ms"] = tau_req * 1e3;
  j["points"] = rows.size();
  j["mc_trials"] = options.mc_trials;
  report << j.dump(2) << "\n";
  return 0;
}

int cmd_joint(const Scenario& scenario, const JointOptions& options, std::ostream& report) {
  const std::uint64_t seed = options.seed.value_or(scenario.seed);

  swarm::JointRunConfig config;
  config.step = options.step_ms ? *options.step_ms * 1e-3 : scenario.sim.step_s;
  config.horizon = options.horizon_s.value_or(scenario.sim.horizon_s);
  config.control_period = scenario.sim.delay_resample_s;

  const swarm::SwarmState initial = initial_state_from_seed(seed, scenario.targets);
  swarm::JointRunRecord record =
      swarm::simulate_joint(initial, scenario.targets, scenario.gains,
                            scenario.radio.to_wireless_params(), scenario.k, config, seed);
  record.trajectory.scenario_hash = scenario_hash(scenario);

  if (!options.out_path.empty()) {
    write_joint_csv(record, options.out_path);
  }
  if (!options.trajectory_out_path.empty()) {
    write_trajectory_csv(record.trajectory, options.trajectory_out_path);
  }

  std::size_t lost = 0;
  for (const auto& p : record.periods) {
    lost += p.lost ? 1 : 0;
  }

  nlohmann::json j;
  j["status"] =
      record.trajectory.status == swarm::RunStatus::kCompleted ? "completed" : "diverged";
  j["converged"] = record.convergence.converged;
  j["settle_time_s"] = record.convergence.converged ? record.convergence.settle_time : -1.0;
  j["tau_max_ms"] = record.tau_max * 1e3;
  j["delay_met_fraction"] = record.delay_met_fraction;
  j["lost_packets"] = lost;
  j["periods"] = record.periods.size();
  j["seed"] = seed;
  report << j.dump(2) << "\n";

  const bool ok = record.trajectory.status == swarm::RunStatus::kCompleted &&
                  record.convergence.converged;
  return ok ? 0 : 2;
}

}  // namespace swarmctl
