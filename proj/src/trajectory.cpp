#include "bombsquad/trajectory.hpp"

#include <algorithm>
#include <stdexcept>

namespace bombsquad {

Vec2 trajectory_position(const Trajectory& traj, double t) {
  if (traj.empty()) {
    throw std::out_of_range("trajectory_position: empty trajectory");
  }
  if (t < traj.start_time() || t > traj.end_time()) {
    throw std::out_of_range("trajectory_position: t outside [t0, T]");
  }
  const auto& bps = traj.breakpoints;
  auto it = std::upper_bound(bps.begin(), bps.end(), t,
                             [](double value, const Trajectory::Breakpoint& bp) {
                               return value < bp.time;
                             });
  if (it == bps.begin()) {
    return bps.front().position;
  }
  if (it == bps.end()) {
    return bps.back().position;
  }
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double u = (t - lo.time) / (hi.time - lo.time);
  return lo.position + (hi.position - lo.position) * u;
}

TrajectoryReport validate_trajectory(const Trajectory& traj, double v_max) {
  TrajectoryReport report;
  const auto& bps = traj.breakpoints;
  for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
    const double dt = bps[k + 1].time - bps[k].time;
    if (dt <= 0.0) {
      report.status = TrajectoryReport::Status::kMalformedTimes;
      report.segment = k;
      return report;
    }
    const double speed = distance(bps[k + 1].position, bps[k].position) / dt;
    if (speed > v_max * (1.0 + 1e-9)) {
      report.status = TrajectoryReport::Status::kSpeedViolation;
      report.segment = k;
      report.observed_speed = speed;
      return report;
    }
  }
  return report;
}

}  // namespace bombsquad
