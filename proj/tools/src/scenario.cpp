#include "swarmctl/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace swarmctl {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw scenario_error("scenario: " + path + ": " + message);
}

double to_number(const json& j, const std::string& path) {
  if (!j.is_number()) {
    fail(path, "expected a number");
  }
  return j.get<double>();
}

/// Walks an object with a fixed key table; every key present must be known,
/// every known key must parse.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) {
      fail(path_, "expected an object");
    }
  }

  void number(const char* key, double& out) {
    if (auto it = j_.find(key); it != j_.end()) {
      out = to_number(*it, path_ + "." + key);
      seen_.push_back(key);
    }
  }

  void integer(const char* key, int& out) {
    if (auto it = j_.find(key); it != j_.end()) {
      const std::string key_path = path_ + "." + key;
      if (!it->is_number_integer()) {
        fail(key_path, "expected an integer");
      }
      out = it->get<int>();
      seen_.push_back(key);
    }
  }

  void uint64(const char* key, std::uint64_t& out) {
    if (auto it = j_.find(key); it != j_.end()) {
      const std::string key_path = path_ + "." + key;
      if (!it->is_number_unsigned() && !it->is_number_integer()) {
        fail(key_path, "expected a non-negative integer");
      }
      if (it->is_number_integer() && it->get<std::int64_t>() < 0) {
        fail(key_path, "expected a non-negative integer");
      }
      out = it->get<std::uint64_t>();
      seen_.push_back(key);
    }
  }

  const json* object(const char* key) {
    if (auto it = j_.find(key); it != j_.end()) {
      seen_.push_back(key);
      return &*it;
    }
    return nullptr;
  }

  void reject(const char* key, const char* reason) {
    if (j_.contains(key)) {
      fail(path_ + "." + key, reason);
    }
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      bool known = false;
      for (const auto& k : seen_) {
        if (k == it.key()) {
          known = true;
          break;
        }
      }
      if (!known) {
        fail(path_ + "." + it.key(), "unknown key");
      }
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::vector<std::string> seen_;
};

}  // namespace

swarm::WirelessParams RadioConfig::to_wireless_params() const {
  swarm::WirelessParams p;
  p.beta = nakagami_beta;
  p.alpha = path_loss_alpha;
  p.density_per_m2 = density_per_m2;
  p.p_t = std::pow(10.0, (tx_power_dbm - 30.0) / 10.0);
  p.noise_psd = std::pow(10.0, (noise_psd_dbm_hz - 30.0) / 10.0);
  p.bandwidth = bandwidth_hz;
  p.packet_bits = packet_bits;
  return p;
}

Scenario parse_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw scenario_error(std::string("scenario: JSON parse error: ") + e.what());
  }

  Scenario s;
  ObjectReader top(root, "$");
  top.number("k", s.k);
  top.uint64("seed", s.seed);

  if (const json* g = top.object("gains")) {
    ObjectReader r(*g, "$.gains");
    r.number("a2", s.gains.a2);
    r.number("b2", s.gains.b2);
    r.number("a_hat2", s.gains.a_hat2);
    r.number("b_hat2", s.gains.b_hat2);
    r.number("a3", s.gains.a3);
    r.number("b3", s.gains.b3);
    r.number("a_hat3", s.gains.a_hat3);
    r.number("b_hat3", s.gains.b_hat3);
    r.finish();
  }

  if (const json* t = top.object("targets")) {
    ObjectReader r(*t, "$.targets");
    for (const char* derived : {"x_bar_23", "x_bar_32", "y_bar_23", "y_bar_32"}) {
      r.reject(derived, "derived field (computed from the leader-relative spacings)");
    }
    r.number("x_bar_12", s.targets.x_bar_12);
    r.number("x_bar_13", s.targets.x_bar_13);
    r.number("y_bar_12", s.targets.y_bar_12);
    r.number("y_bar_13", s.targets.y_bar_13);
    r.number("v_bar_x", s.targets.v_bar_x);
    r.number("v_bar_y", s.targets.v_bar_y);
    r.finish();
  }

  if (const json* w = top.object("radio")) {
    ObjectReader r(*w, "$.radio");
    r.integer("nakagami_beta", s.radio.nakagami_beta);
    r.number("path_loss_alpha", s.radio.path_loss_alpha);
    r.number("density_per_m2", s.radio.density_per_m2);
    r.number("tx_power_dbm", s.radio.tx_power_dbm);
    r.number("noise_psd_dbm_hz", s.radio.noise_psd_dbm_hz);
    r.number("bandwidth_hz", s.radio.bandwidth_hz);
    r.number("packet_bits", s.radio.packet_bits);
    r.finish();
  }

  if (const json* c = top.object("sim")) {
    ObjectReader r(*c, "$.sim");
    r.number("step_s", s.sim.step_s);
    r.number("horizon_s", s.sim.horizon_s);
    r.number("delay_resample_s", s.sim.delay_resample_s);
    r.finish();
  }

  top.finish();

  // Invariants, with key paths in the messages.
  try {
    s.gains.validate();
  } catch (const std::invalid_argument& e) {
    throw scenario_error(std::string("scenario: $.gains: ") + e.what());
  }
  try {
    s.radio.to_wireless_params().validate();
  } catch (const std::invalid_argument& e) {
    throw scenario_error(std::string("scenario: $.radio: ") + e.what());
  }
  if (!(s.k > 1.0)) {
    throw scenario_error("scenario: $.k: must be > 1");
  }
  if (!(s.sim.step_s > 0.0) || !(s.sim.horizon_s > 0.0) || !(s.sim.delay_resample_s > 0.0)) {
    throw scenario_error("scenario: $.sim: step_s, horizon_s, delay_resample_s must be > 0");
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw scenario_error("scenario: cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
  json j;
  j["k"] = s.k;
  j["seed"] = s.seed;
  j["gains"] = {{"a2", s.gains.a2},         {"b2", s.gains.b2},
                {"a_hat2", s.gains.a_hat2}, {"b_hat2", s.gains.b_hat2},
                {"a3", s.gains.a3},         {"b3", s.gains.b3},
                {"a_hat3", s.gains.a_hat3}, {"b_hat3", s.gains.b_hat3}};
  j["targets"] = {{"x_bar_12", s.targets.x_bar_12}, {"x_bar_13", s.targets.x_bar_13},
                  {"y_bar_12", s.targets.y_bar_12}, {"y_bar_13", s.targets.y_bar_13},
                  {"v_bar_x", s.targets.v_bar_x},   {"v_bar_y", s.targets.v_bar_y}};
  j["radio"] = {{"nakagami_beta", s.radio.nakagami_beta},
                {"path_loss_alpha", s.radio.path_loss_alpha},
                {"density_per_m2", s.radio.density_per_m2},
                {"tx_power_dbm", s.radio.tx_power_dbm},
                {"noise_psd_dbm_hz", s.radio.noise_psd_dbm_hz},
                {"bandwidth_hz", s.radio.bandwidth_hz},
                {"packet_bits", s.radio.packet_bits}};
  j["sim"] = {{"step_s", s.sim.step_s},
              {"horizon_s", s.sim.horizon_s},
              {"delay_resample_s", s.sim.delay_resample_s}};
  return j.dump(2) + "\n";
}

std::uint64_t scenario_hash(const Scenario& s) {
  const std::string text = serialize_scenario(s);
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace swarmctl
