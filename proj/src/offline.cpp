#include "bombsquad/offline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bombsquad/engine.hpp"
#include "bombsquad/strategies.hpp"

namespace bombsquad {

namespace {

struct OrderedSpeeds {
  double d_slow, v_slow, d_fast, v_fast;
};

OrderedSpeeds ordered(const Instance& inst) {
  const RobotSpec& s = inst.slow();
  const RobotSpec& f = inst.fast();
  return {s.start_distance(), s.speed, f.start_distance(), f.speed};
}

}  // namespace

double offline_optimal_time(const Instance& inst) {
  const auto [d1, v1, d2, v2] = ordered(inst);
  const double D = inst.critical_distance;
  const double slow_alone = (d1 + D) / v1;
  const double fast_alone = (d2 + D) / v2;
  const double handoff = (D - d2) / v2 + 2.0 * (d1 + d2) / (v1 + v2);
  return std::min({slow_alone, fast_alone, handoff});
}

const char* offline_mode_name(OfflineMode mode) {
  switch (mode) {
    case OfflineMode::kFastAlone: return "fast_alone";
    case OfflineMode::kSlowAlone: return "slow_alone";
    case OfflineMode::kHandoff: return "handoff";
  }
  return "fast_alone";
}

OfflinePlanShape offline_plan_shape(const Instance& inst) {
  const auto [d1, v1, d2, v2] = ordered(inst);
  const double D = inst.critical_distance;
  const double slow_alone = (d1 + D) / v1;
  const double fast_alone = (d2 + D) / v2;
  const double handoff = (D - d2) / v2 + 2.0 * (d1 + d2) / (v1 + v2);

  OfflinePlanShape shape;
  if (handoff < slow_alone && handoff < fast_alone) {
    shape.mode = OfflineMode::kHandoff;
    // Both robots head for the meeting point on the segment from S toward the
    // fast robot's start; the gap d1 + d2 closes at combined speed.
    const double t_meet = (d1 + d2) / (v1 + v2);
    const double carry = v1 * t_meet - d1;  // slow robot's progress past S
    const Vec2 toward_fast = normalized(inst.fast().start);
    shape.handoff = Handoff{t_meet, toward_fast * carry};
  } else if (fast_alone <= slow_alone) {
    shape.mode = OfflineMode::kFastAlone;
  } else {
    shape.mode = OfflineMode::kSlowAlone;
  }
  return shape;
}

OfflinePlan offline_optimal_plan(const Instance& inst) {
  const OfflinePlanShape shape = offline_plan_shape(inst);
  StrategyPair pair = make_offline_pair(inst);
  OfflinePlan plan;
  plan.mode = shape.mode;
  plan.handoff = shape.handoff;
  plan.outcome = simulate(inst, pair);
  return plan;
}

double offline_bruteforce_oracle(const Instance& inst, int grid_n) {
  if (grid_n < 16) {
    throw std::invalid_argument("offline_bruteforce_oracle: grid_n must be >= 16");
  }
  const double D = inst.critical_distance;
  const RobotSpec& slow = inst.slow();
  const RobotSpec& fast = inst.fast();
  const double d_slow = slow.start_distance();

  double best = std::min((slow.start_distance() + D) / slow.speed,
                         (fast.start_distance() + D) / fast.speed);

  // Handoff candidates: the slow robot routes the bomb S -> M, the fast robot
  // heads straight to M from its actual start, waits if early, then runs
  // radially outward. Every grid point is a feasible plan, so the minimum can
  // only approach the closed form from above.
  const double step = 2.0 * D / (grid_n - 1);
  for (int iy = 0; iy < grid_n; ++iy) {
    const double my = -D + step * iy;
    for (int ix = 0; ix < grid_n; ++ix) {
      const Vec2 m{-D + step * ix, my};
      const double radius = m.norm();
      if (radius > D) {
        continue;
      }
      const double bomb_at_m = (d_slow + radius) / slow.speed;
      const double fast_at_m = distance(fast.start, m) / fast.speed;
      const double total = std::max(bomb_at_m, fast_at_m) + (D - radius) / fast.speed;
      best = std::min(best, total);
    }
  }
  return best;
}

}  // namespace bombsquad
