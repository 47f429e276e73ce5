#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <swarm/formation.hpp>
#include <swarm/gains.hpp>
#include <swarm/wireless.hpp>

namespace swarmctl {

/// Configuration problem: unreadable file, malformed JSON, unknown or
/// derived keys, violated invariants. Messages carry the offending key path.
class scenario_error : public std::runtime_error {
 public:
  explicit scenario_error(const std::string& what) : std::runtime_error(what) {}
};

/// Radio block in user-facing units (dBm for powers); converted to
/// swarm::WirelessParams on demand so that serialization round-trips the
/// numbers exactly as given.
struct RadioConfig {
  int nakagami_beta = 3;
  double path_loss_alpha = 3.0;
  double density_per_m2 = 0.05;
  double tx_power_dbm = 20.0;
  double noise_psd_dbm_hz = -174.0;
  double bandwidth_hz = 20e6;
  double packet_bits = 3200.0;

  swarm::WirelessParams to_wireless_params() const;
};

struct SimConfig {
  double step_s = 5e-4;
  double horizon_s = 60.0;
  double delay_resample_s = 0.01;
};

/// A fully resolved experiment description. Defaults reproduce the standard
/// three-UAV scenario; a config file only overrides what it names.
struct Scenario {
  swarm::ControlGains gains;
  swarm::FormationTargets targets;
  RadioConfig radio;
  double k = 1.01;
  SimConfig sim;
  std::uint64_t seed = 1;
};

/// Parses and validates a scenario file (strict JSON: unknown keys are
/// errors, derived spacings may not be specified).
Scenario load_scenario(const std::string& path);

/// Same, from a JSON text (used by load_scenario and tests).
Scenario parse_scenario(const std::string& json_text);

/// Canonical serialization (sorted keys, full form).
std::string serialize_scenario(const Scenario& s);

/// FNV-1a hash of the canonical serialization; stamped into trajectories.
std::uint64_t scenario_hash(const Scenario& s);

}  // namespace swarmctl
