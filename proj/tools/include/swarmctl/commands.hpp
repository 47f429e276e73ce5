#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <swarm/formation.hpp>

#include "swarmctl/scenario.hpp"

namespace swarmctl {

/// Initial condition of a run: all eight error coordinates drawn uniform
/// from [-5, 5] out of a dedicated substream of the seed, mapped back to
/// UAV positions/velocities with the leader at the origin.
swarm::SwarmState initial_state_from_seed(std::uint64_t seed,
                                          const swarm::FormationTargets& targets);

/// Stability analysis report. Writes a JSON copy to out_path when non-empty.
int cmd_delay_bound(const Scenario& scenario, const std::string& out_path,
                    std::ostream& report);

struct SimulateOptions {
  std::string out_path;
  std::optional<double> delay_ms;  // constant-delay override; 0 disables the delay
  std::optional<double> step_ms;
  std::optional<double> horizon_s;
  std::optional<std::uint64_t> seed;
};

/// Integrates the delayed error dynamics and writes the trajectory CSV.
/// Exit 0 only for a completed, converged run; 2 otherwise.
int cmd_simulate(const Scenario& scenario, const SimulateOptions& options,
                 std::ostream& report);

struct SweepOptions {
  std::string out_path;
  std::vector<double> densities{0.01, 0.05, 0.10};
  double spacing_min = 1.0;
  double spacing_max = 12.0;
  double spacing_step = 0.5;
  std::uint64_t mc_trials = 0;  // 0 leaves the Monte Carlo columns empty
  std::optional<std::uint64_t> seed;
};

/// Reliability-vs-spacing sweep at each interferer density; analytic always,
/// Monte Carlo when mc_trials > 0.
int cmd_reliability(const Scenario& scenario, const SweepOptions& options,
                    std::ostream& report);

struct JointOptions {
  std::string out_path;
  std::string trajectory_out_path;  // optional second artifact
  std::optional<double> step_ms;
  std::optional<double> horizon_s;
  std::optional<std::uint64_t> seed;
};

/// Coupled control-plus-wireless run; writes the per-period CSV.
int cmd_joint(const Scenario& scenario, const JointOptions& options, std::ostream& report);

}  // namespace swarmctl
