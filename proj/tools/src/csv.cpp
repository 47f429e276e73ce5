#include "swarmctl/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace swarmctl {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file " + path);
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

void write_trajectory_csv(const swarm::Trajectory& traj, const std::string& path) {
  auto out = open_output(path);
  out << "t,delta12x,delta13x,z2x,z3x,delta12y,delta13y,z2y,z3y,tau_ms\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    out << format_double(traj.t[i]);
    for (const auto& column : traj.e) {
      out << ',' << format_double(column[i]);
    }
    out << ',' << format_double(traj.tau[i] * 1e3) << '\n';
  }
}

void write_reliability_csv(const std::vector<ReliabilityRow>& rows, const std::string& path) {
  auto out = open_output(path);
  out << "density_per_m2,spacing_m,reliability_analytic,reliability_mc,mc_ci95\n";
  for (const auto& row : rows) {
    out << format_double(row.density) << ',' << format_double(row.spacing) << ','
        << format_double(row.analytic) << ',';
    if (row.has_mc) {
      out << format_double(row.mc) << ',' << format_double(row.mc_ci95);
    } else {
      out << ',';
    }
    out << '\n';
  }
}

void write_joint_csv(const swarm::JointRunRecord& record, const std::string& path) {
  auto out = open_output(path);
  out << "period,t,distance_m,sinr,delay_ms,lost\n";
  for (std::size_t i = 0; i < record.periods.size(); ++i) {
    const auto& p = record.periods[i];
    out << i << ',' << format_double(p.t) << ',' << format_double(p.distance) << ','
        << format_double(p.sinr) << ',' << format_double(p.delay * 1e3) << ','
        << (p.lost ? 1 : 0) << '\n';
  }
}

}  // namespace swarmctl
