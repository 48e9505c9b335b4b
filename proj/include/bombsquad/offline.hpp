#ifndef BOMBSQUAD_OFFLINE_HPP_
#define BOMBSQUAD_OFFLINE_HPP_

#include <optional>

#include "bombsquad/core.hpp"
#include "bombsquad/outcome.hpp"

namespace bombsquad {

/// Optimal delivery time:
///   min( (d_s + D)/v_s,  (d_f + D)/v_f,  (D - d_f)/v_f + 2 (d_s + d_f)/(v_s + v_f) )
/// with (s, f) the slower/faster robot (speed ties break toward index 0 as slower).
double offline_optimal_time(const Instance& inst);

enum class OfflineMode { kFastAlone, kSlowAlone, kHandoff };

const char* offline_mode_name(OfflineMode mode);

struct Handoff {
  double time = 0.0;
  Vec2 point;
};

/// An executable optimal plan. Handoff mode is chosen only when the handoff
/// term of the optimum is strictly smallest (tie preference: FastAlone,
/// SlowAlone, Handoff). The outcome is produced by running the plan through
/// the simulator, so it carries full event logs and trajectories.
struct OfflinePlan {
  OfflineMode mode = OfflineMode::kFastAlone;
  std::optional<Handoff> handoff;
  DeliveryOutcome outcome;
};

OfflinePlan offline_optimal_plan(const Instance& inst);

/// Mode and handoff point without running the simulator.
struct OfflinePlanShape {
  OfflineMode mode = OfflineMode::kFastAlone;
  std::optional<Handoff> handoff;
};
OfflinePlanShape offline_plan_shape(const Instance& inst);

/// Independent check of the closed form: the best of (a) each robot delivering
/// alone and (b) every handoff point M on a grid_n x grid_n grid covering the
/// disk of radius D, where the slow robot routes the bomb S -> M in a straight
/// line and the fast robot finishes radially. Converges to the closed form
/// from above as grid_n grows.
double offline_bruteforce_oracle(const Instance& inst, int grid_n);

}  // namespace bombsquad

#endif  // BOMBSQUAD_OFFLINE_HPP_
