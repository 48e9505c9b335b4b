#ifndef BOMBSQUAD_TRAJECTORY_HPP_
#define BOMBSQUAD_TRAJECTORY_HPP_

#include <cstddef>
#include <vector>

#include "bombsquad/geometry.hpp"

namespace bombsquad {

/// Timed piecewise-linear path of one agent. Breakpoint times are strictly
/// increasing; each segment is traversed at constant velocity.
struct Trajectory {
  struct Breakpoint {
    double time = 0.0;
    Vec2 position;
  };

  std::vector<Breakpoint> breakpoints;

  bool empty() const { return breakpoints.empty(); }
  double start_time() const { return breakpoints.front().time; }
  double end_time() const { return breakpoints.back().time; }
};

/// Piecewise-linear evaluation. Throws std::out_of_range for t outside [t0, T].
Vec2 trajectory_position(const Trajectory& traj, double t);

struct TrajectoryReport {
  enum class Status { kOk, kSpeedViolation, kMalformedTimes };

  Status status = Status::kOk;
  std::size_t segment = 0;      // first violating segment, when not ok
  double observed_speed = 0.0;  // for speed violations

  bool ok() const { return status == Status::kOk; }
};

/// Checks every segment speed against v_max * (1 + 1e-9). Non-monotone (or
/// zero-duration) segments are reported as malformed.
TrajectoryReport validate_trajectory(const Trajectory& traj, double v_max);

}  // namespace bombsquad

#endif  // BOMBSQUAD_TRAJECTORY_HPP_
