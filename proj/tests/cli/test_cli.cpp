// End-to-end checks of the swarmctl binary: exit codes, output schemas and
// byte-level reproducibility. The binary path arrives via SWARMCTL_BIN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string binary_path() {
  const char* env = std::getenv("SWARMCTL_BIN");
  REQUIRE_MESSAGE(env != nullptr, "SWARMCTL_BIN must point at the swarmctl binary");
  return env;
}

std::string work_dir() {
  const char* env = std::getenv("SWARMCTL_TEST_DIR");
  return env ? env : ".";
}

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string out_file = work_dir() + "/cli_stdout.txt";
  const std::string cmd =
      env_prefix + binary_path() + " " + args + " > " + out_file + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.stdout_text = ss.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("delay-bound prints the bound and exits zero") {
  const auto r = run("delay-bound");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("tau_max_ms: 18.03") != std::string::npos);
  CHECK(r.stdout_text.find("lambda_max:") != std::string::npos);
  CHECK(r.stdout_text.find("lyapunov_residual:") != std::string::npos);
}

TEST_CASE("delay-bound honors k overrides from config") {
  const std::string cfg = work_dir() + "/k2.json";
  write_file(cfg, R"({"k": 2.0})");
  const auto r = run("delay-bound --config " + cfg);
  CHECK(r.exit_code == 0);
  // tau_max <= 1/(2k) = 250 ms; with coupling it lands well below.
  const auto pos = r.stdout_text.find("tau_max_ms: ");
  REQUIRE(pos != std::string::npos);
  const double tau_ms = std::stod(r.stdout_text.substr(pos + 12));
  CHECK(tau_ms <= 250.0);
  CHECK(tau_ms > 0.0);
}

TEST_CASE("unstable gain sets exit with the numerical failure code") {
  const std::string cfg = work_dir() + "/unstable.json";
  write_file(cfg, R"({"gains": {"a2": 32.4, "b2": 0.022, "a_hat2": 6.8, "b_hat2": 14.3,
                                "a3": 15.7, "b3": 0.195, "a_hat3": 15.4, "b_hat3": 0.08}})");
  const auto r = run("delay-bound --config " + cfg);
  CHECK(r.exit_code == 2);
  CHECK(r.stdout_text.find("undelayed system unstable") != std::string::npos);
}

TEST_CASE("config errors exit with the usage code") {
  const std::string cfg = work_dir() + "/bad.json";
  write_file(cfg, R"({"targets": {"x_bar_23": 1.0}})");
  CHECK(run("delay-bound --config " + cfg).exit_code == 1);

  write_file(cfg, R"({"gains": {"a2": -1}})");
  CHECK(run("delay-bound --config " + cfg).exit_code == 1);

  CHECK(run("delay-bound --config " + work_dir() + "/missing.json").exit_code == 1);
  CHECK(run("no-such-command").exit_code != 0);
}

TEST_CASE("simulate converges, writes the pinned schema, and repeats bytes") {
  const std::string out1 = work_dir() + "/traj1.csv";
  const std::string out2 = work_dir() + "/traj2.csv";
  const auto r1 = run("simulate --seed 3 --horizon-s 30 --out " + out1);
  CHECK(r1.exit_code == 0);
  CHECK(r1.stdout_text.find("\"converged\": true") != std::string::npos);

  const auto r2 = run("simulate --seed 3 --horizon-s 30 --out " + out2);
  CHECK(r2.exit_code == 0);

  const std::string a = slurp(out1);
  CHECK(a == slurp(out2));
  CHECK(a.rfind("t,delta12x,delta13x,z2x,z3x,delta12y,delta13y,z2y,z3y,tau_ms\n", 0) == 0);

  // 30 s at the 0.5 ms default step: header + 60001 rows.
  const auto lines = std::count(a.begin(), a.end(), '\n');
  CHECK(lines == 60002);
}

TEST_CASE("zero-delay override converges faster than the delayed run") {
  const std::string out = work_dir() + "/traj_nodelay.csv";
  const auto delayed = run("simulate --seed 5 --horizon-s 40 --out " + work_dir() +
                           "/traj_delay.csv");
  const auto instant = run("simulate --seed 5 --horizon-s 40 --delay-ms 0 --out " + out);
  REQUIRE(delayed.exit_code == 0);
  REQUIRE(instant.exit_code == 0);

  const auto settle = [](const std::string& text) {
    const auto pos = text.find("\"settle_time_s\": ");
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + 17));
  };
  CHECK(settle(instant.stdout_text) <= settle(delayed.stdout_text));
}

TEST_CASE("reliability sweep emits the pinned schema with empty MC columns") {
  const std::string out = work_dir() + "/sweep.csv";
  const auto r = run(
      "reliability --densities 0.05 --spacing-min 4 --spacing-max 10 --spacing-step 6 "
      "--out " +
      out);
  CHECK(r.exit_code == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("density_per_m2,spacing_m,reliability_analytic,reliability_mc,mc_ci95\n",
                   0) == 0);
  CHECK(text.find("0.05,4,0.90") != std::string::npos);
  CHECK(text.find("0.05,10,0.35") != std::string::npos);
  CHECK(text.find(",,\n") != std::string::npos);  // MC columns empty
}

TEST_CASE("each density column is non-increasing in spacing") {
  const std::string out = work_dir() + "/mono.csv";
  const auto r = run(
      "reliability --densities 0.01,0.1 --spacing-min 1 --spacing-max 12 "
      "--spacing-step 0.5 --out " +
      out);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);  // header
  double prev = 2.0;
  std::string prev_density;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const auto c3 = line.find(',', c2 + 1);
    const std::string density = line.substr(0, c1);
    const double analytic = std::stod(line.substr(c2 + 1, c3 - c2 - 1));
    if (density != prev_density) {
      prev = 2.0;
      prev_density = density;
    }
    CHECK(analytic <= prev + 1e-12);
    prev = analytic;
  }
}

TEST_CASE("montecarlo output is worker-count independent") {
  const std::string out1 = work_dir() + "/mc1.csv";
  const std::string out4 = work_dir() + "/mc4.csv";
  const std::string args =
      "montecarlo --seed 21 --densities 0.05 --spacing-min 4 --spacing-max 4 "
      "--spacing-step 1 --mc-trials 20000 --out ";
  const auto r1 = run(args + out1, "SWARMCTL_THREADS=1 ");
  const auto r4 = run(args + out4, "SWARMCTL_THREADS=4 ");
  CHECK(r1.exit_code == 0);
  CHECK(r4.exit_code == 0);
  CHECK(slurp(out1) == slurp(out4));
}

TEST_CASE("joint run writes per-period records and converges at low density") {
  const std::string cfg = work_dir() + "/joint.json";
  write_file(cfg, R"({"radio": {"density_per_m2": 0.01}, "sim": {"horizon_s": 40.0}})");
  const std::string out = work_dir() + "/joint.csv";
  const auto r = run("joint --seed 4 --config " + cfg + " --out " + out);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"converged\": true") != std::string::npos);
  CHECK(r.stdout_text.find("\"delay_met_fraction\"") != std::string::npos);

  const std::string text = slurp(out);
  CHECK(text.rfind("period,t,distance_m,sinr,delay_ms,lost\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4001);

  const std::string out2 = work_dir() + "/joint2.csv";
  const auto r2 = run("joint --seed 4 --config " + cfg + " --out " + out2);
  CHECK(r2.exit_code == 0);
  CHECK(text == slurp(out2));
}
