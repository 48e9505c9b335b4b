#ifndef BOMBSQUAD_TESTS_SUPPORT_HPP_
#define BOMBSQUAD_TESTS_SUPPORT_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>

#include "bombsquad/analysis.hpp"
#include "bombsquad/engine.hpp"
#include "bombsquad/offline.hpp"
#include "bombsquad/strategies.hpp"
#include "bombsquad/trajectory.hpp"

namespace bombsquad::testing {

/// splitmix64: tiny, fully deterministic across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  uint64_t state_;
};

inline Instance random_two_ray_instance(Rng& rng, KnowledgeConfig knowledge, double d_max = 5.0,
                                        double v_min = 0.05, double D_lo = 0.2, double D_hi = 3.0) {
  const double d1 = rng.uniform(0.0, d_max);
  const double d2 = rng.uniform(0.0, d_max);
  const double v1 = rng.uniform(v_min, 1.0);
  const double v2 = rng.uniform(v_min, 1.0);
  const double D = rng.uniform(D_lo, D_hi);
  return make_two_ray_instance(d1, v1, d2, v2, D, knowledge);
}

/// Runs every cross-cutting outcome invariant: trajectory feasibility for
/// both robots and the bomb, bomb continuity from the origin, terminal radius
/// D, and custody exclusivity over the event log.
inline bool outcome_invariants_hold(const Instance& inst, const DeliveryOutcome& outcome,
                                    std::string* why = nullptr) {
  auto fail = [&](const std::string& message) {
    if (why != nullptr) *why = message;
    return false;
  };

  for (int i = 0; i < 2; ++i) {
    const auto report = validate_trajectory(outcome.robot_trajectories[static_cast<size_t>(i)],
                                            inst.robots[static_cast<size_t>(i)].speed);
    if (!report.ok()) return fail("robot trajectory infeasible");
  }
  const double v_max = std::max(inst.robots[0].speed, inst.robots[1].speed);
  if (!validate_trajectory(outcome.bomb_trajectory, v_max).ok()) {
    return fail("bomb trajectory infeasible");
  }

  const auto& bomb = outcome.bomb_trajectory.breakpoints;
  if (bomb.empty() || bomb.front().position != Vec2{0.0, 0.0}) {
    return fail("bomb does not start at the source");
  }
  const double final_radius = bomb.back().position.norm();
  const double D = inst.critical_distance;
  if (std::fabs(final_radius - D) > 1e-9 * std::max(1.0, D)) {
    return fail("bomb does not end on the boundary");
  }

  int holder = -1;
  for (const Event& e : outcome.events) {
    if (e.kind == EventKind::kBombPickup) {
      holder = e.robot;  // direct transfers skip an explicit set-down
    } else if (e.kind == EventKind::kBombSetDown) {
      if (holder != e.robot) return fail("set-down by a robot that was not holding");
      holder = -1;
    }
  }
  return true;
}

inline double rel_err(double actual, double expected) {
  return std::fabs(actual - expected) / std::max(1.0, std::fabs(expected));
}

inline const double kSqrt2 = std::numbers::sqrt2;
inline const double kOneAxisUpper = (5.0 + 4.0 * kSqrt2) / 7.0;
inline const double kVisibleTight = 1.0 + kSqrt2;
inline const double kInvisibleUpper = (7.0 + std::sqrt(17.0)) / 2.0;
inline const double kInvisibleLower = 2.0 + std::sqrt(5.0);

}  // namespace bombsquad::testing

#endif  // BOMBSQUAD_TESTS_SUPPORT_HPP_
