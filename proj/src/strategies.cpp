#include "bombsquad/strategies.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

namespace bombsquad {

namespace {

constexpr Vec2 kSource{0.0, 0.0};

bool at_source(const RobotView& v) { return v.position() == kSource; }

/// Bomb lying on the ground at this robot's position (not in anyone's hands).
bool bomb_on_ground_here(const RobotView& v) {
  return v.bomb_at_my_position() && !v.holding_bomb() && !v.other_here_holding_bomb();
}

/// The partner is face-to-face AND settled exactly at the source. Waiters act
/// only on settled partners so meeting times stay exact; a collocation fires a
/// tolerance-width early while the partner is still inbound.
bool partner_settled_at_source(const RobotView& v) {
  return v.other_robot_here() && v.knows_other_speed() && v.other_position() == kSource;
}

// ---------------------------------------------------------------------------
// Algorithm: common-axis delivery. Move to S (first arrival takes the bomb),
// then along the shared +x direction; a faster robot takes the bomb from any
// slower carrier it touches.

class OneAxisRobot final : public RobotStrategy {
 public:
  Directive on_event(const RobotView& v, WakeReason why) override {
    if (state_ == State::kApproach) {
      if (why == WakeReason::kArrived && at_source(v)) {
        state_ = State::kOnAxis;
        return on_axis(v);
      }
      if (v.other_here_holding_bomb() && v.knows_other_speed() && v.faster_than_other()) {
        state_ = State::kOnAxis;
        return Directive::pick_up_bomb();
      }
      return Directive::move_to(kSource);
    }
    return on_axis(v);
  }

 private:
  enum class State { kApproach, kOnAxis };

  Directive on_axis(const RobotView& v) {
    if (v.holding_bomb()) {
      return Directive::move_radially_outward();
    }
    if (v.other_here_holding_bomb()) {
      if (v.knows_other_speed() && v.faster_than_other()) {
        return Directive::pick_up_bomb();
      }
      return Directive::move_radially_outward();
    }
    if (bomb_on_ground_here(v)) {
      return Directive::pick_up_bomb();
    }
    return Directive::move_radially_outward();
  }

  State state_ = State::kApproach;
};

// ---------------------------------------------------------------------------
// Algorithm: visible boundary. Move to S; the first arrival waits D/v; if the
// other robot shows up within the window the faster one delivers, otherwise
// the waiter delivers alone.

class VisibleWaitRobot final : public RobotStrategy {
 public:
  Directive on_event(const RobotView& v, WakeReason why) override {
    switch (state_) {
      case State::kApproach:
        if ((why == WakeReason::kArrived || why == WakeReason::kCollocated) && at_source(v)) {
          return arrived_at_source(v);
        }
        return Directive::move_to(kSource);
      case State::kWaiting:
        return waiting(v, why);
      case State::kDeliver:
        if (!v.holding_bomb() && bomb_on_ground_here(v)) {
          return Directive::pick_up_bomb();
        }
        return Directive::move_radially_outward();
      case State::kIdle:
        return Directive::wait_forever();
    }
    return Directive::wait_forever();
  }

 private:
  enum class State { kApproach, kWaiting, kDeliver, kIdle };

  Directive arrived_at_source(const RobotView& v) {
    if (v.other_robot_here() && v.knows_other_speed()) {
      return resolve_meeting(v);
    }
    if (v.other_robot_here()) {
      return Directive::wait_forever();  // collocation resolves this instant
    }
    if (!bomb_on_ground_here(v)) {
      state_ = State::kIdle;  // bomb already gone; nothing left to do
      return Directive::wait_forever();
    }
    state_ = State::kWaiting;
    wake_time_ = v.time() + v.critical_distance() / v.speed();
    return Directive::wait_until(wake_time_);
  }

  Directive waiting(const RobotView& v, WakeReason why) {
    if (why == WakeReason::kTimer) {
      if (bomb_on_ground_here(v)) {
        state_ = State::kDeliver;
        return Directive::pick_up_bomb();
      }
      state_ = State::kIdle;
      return Directive::wait_forever();
    }
    if (partner_settled_at_source(v)) {
      return resolve_meeting(v);
    }
    return Directive::wait_until(wake_time_);
  }

  Directive resolve_meeting(const RobotView& v) {
    if (v.faster_than_other() && bomb_on_ground_here(v)) {
      state_ = State::kDeliver;
      return Directive::pick_up_bomb();
    }
    state_ = State::kIdle;
    return Directive::wait_forever();
  }

  State state_ = State::kApproach;
  double wake_time_ = 0.0;
};

// ---------------------------------------------------------------------------
// Algorithm: discoverable boundary. Move to S; a robot that crossed the
// boundary on the way in waits D/v at S, one that started inside walks out to
// the boundary and back. Whoever finds the bomb still at S afterwards carries
// it out. No robot-to-robot handoffs.

class DiscoverableRobot final : public RobotStrategy {
 public:
  Directive on_event(const RobotView& v, WakeReason why) override {
    switch (state_) {
      case State::kApproach:
        if (why == WakeReason::kArrived && at_source(v)) {
          if (v.boundary_discovered()) {
            state_ = State::kWaitingAtS;
            wake_time_ = v.time() + v.critical_distance() / v.speed();
            return Directive::wait_until(wake_time_);
          }
          state_ = State::kExploring;
          return Directive::move_radially_outward();
        }
        return Directive::move_to(kSource);
      case State::kWaitingAtS:
        if (why == WakeReason::kTimer) {
          return take_if_present(v);
        }
        return Directive::wait_until(wake_time_);
      case State::kExploring:
        if (why == WakeReason::kBoundaryDiscovered ||
            (why == WakeReason::kArrived && v.boundary_discovered())) {
          state_ = State::kReturning;
          return Directive::move_to(kSource);
        }
        // Learned D face-to-face mid-walk: the leg still runs to the boundary.
        return v.boundary_discovered()
                   ? Directive::move_radially_outward_until(v.critical_distance())
                   : Directive::move_radially_outward();
      case State::kReturning:
        if (why == WakeReason::kArrived && at_source(v)) {
          return take_if_present(v);
        }
        return Directive::move_to(kSource);
      case State::kDeliver:
        if (!v.holding_bomb() && bomb_on_ground_here(v)) {
          return Directive::pick_up_bomb();
        }
        return Directive::move_radially_outward();
      case State::kIdle:
        return Directive::wait_forever();
    }
    return Directive::wait_forever();
  }

 private:
  enum class State { kApproach, kWaitingAtS, kExploring, kReturning, kDeliver, kIdle };

  Directive take_if_present(const RobotView& v) {
    if (bomb_on_ground_here(v)) {
      state_ = State::kDeliver;
      return Directive::pick_up_bomb();
    }
    state_ = State::kIdle;
    return Directive::wait_forever();
  }

  State state_ = State::kApproach;
  double wake_time_ = 0.0;
};

// ---------------------------------------------------------------------------
// Zigzag round machinery shared by the invisible-boundary algorithm and the
// generic single-robot searcher. Round k carries the bomb out to turn distance
// x_k (set-down points 1, a, a^2, ... in the geometric case) and returns to S.

class ZigzagRounds {
 public:
  explicit ZigzagRounds(ZigzagSchedule schedule) : schedule_(std::move(schedule)) {}

  int round() const { return round_; }
  void start_round_one() { round_ = 1; }
  void next_round() { ++round_; }
  double current_turn_distance() const { return schedule_.turn_distance(round_); }

 private:
  ZigzagSchedule schedule_;
  int round_ = 0;
};

// Algorithm: invisible boundary. The first robot at S waits 2/v for company;
// alone, it zigzags the bomb outward round by round, returning to S between
// rounds. When the two robots finally stand at S together the slower one
// shares the bomb's direction and stays put; the faster one fetches the bomb
// and moves outward for good.

class InvisibleZigzagRobot final : public RobotStrategy {
 public:
  explicit InvisibleZigzagRobot(double expansion_factor)
      : rounds_(ZigzagSchedule::geometric(expansion_factor)) {}

  Directive on_event(const RobotView& v, WakeReason why) override {
    switch (state_) {
      case State::kApproach:
        if (why == WakeReason::kArrived && at_source(v)) {
          return arrived_at_source(v);
        }
        if (why == WakeReason::kCollocated && at_source(v)) {
          return arrived_at_source(v);
        }
        return Directive::move_to(kSource);
      case State::kWaitingWindow:
        if (why == WakeReason::kTimer) {
          if (bomb_on_ground_here(v)) {
            rounds_.start_round_one();
            state_ = State::kCarryOut;
            return Directive::pick_up_bomb();
          }
          state_ = State::kIdle;
          return Directive::wait_forever();
        }
        if (partner_settled_at_source(v)) {
          return resolve_meeting(v);
        }
        return Directive::wait_until(wake_time_);
      case State::kCarryOut:
        if (why == WakeReason::kArrived && v.holding_bomb()) {
          state_ = State::kReturnToS;
          return Directive::set_down_bomb();
        }
        if (v.holding_bomb()) {
          return Directive::move_radially_outward_until(rounds_.current_turn_distance());
        }
        return Directive::move_radially_outward();  // post-set-down re-query
      case State::kReturnToS:
        if (why == WakeReason::kArrived && at_source(v)) {
          if (v.other_robot_here() && v.knows_other_speed()) {
            return resolve_meeting(v);
          }
          rounds_.next_round();
          state_ = State::kGoToBomb;
          return Directive::move_to(bomb_position(v));
        }
        return Directive::move_to(kSource);
      case State::kGoToBomb:
        if (why == WakeReason::kArrived && bomb_on_ground_here(v)) {
          state_ = State::kCarryOut;
          return Directive::pick_up_bomb();
        }
        if (why == WakeReason::kCollocated && v.knows_other_speed() && v.faster_than_other()) {
          // Learned it is the faster robot: fetch and never turn back.
          state_ = State::kFetch;
          return Directive::move_to(bomb_position(v));
        }
        return Directive::move_to(bomb_position(v));
      case State::kAwaitPartner:
        if (why == WakeReason::kCollocated || why == WakeReason::kViewChanged) {
          if (v.other_robot_here() && v.knows_other_speed()) {
            return resolve_meeting(v);
          }
        }
        return Directive::wait_forever();
      case State::kAwaitInfo:
        if (v.bomb_sighting().has_value()) {
          state_ = State::kFetch;
          return Directive::move_to(bomb_position(v));
        }
        return Directive::wait_forever();
      case State::kFetch:
        if (why == WakeReason::kArrived && bomb_on_ground_here(v)) {
          state_ = State::kDeliverForever;
          return Directive::pick_up_bomb();
        }
        return Directive::move_to(bomb_position(v));
      case State::kDeliverForever:
        return Directive::move_radially_outward();
      case State::kIdle:
        return Directive::wait_forever();
    }
    return Directive::wait_forever();
  }

 private:
  enum class State {
    kApproach,
    kWaitingWindow,
    kCarryOut,
    kReturnToS,
    kGoToBomb,
    kAwaitPartner,
    kAwaitInfo,
    kFetch,
    kDeliverForever,
    kIdle,
  };

  static Vec2 bomb_position(const RobotView& v) {
    const auto& sighting = v.bomb_sighting();
    if (!sighting.has_value()) {
      throw SimulationError(SimulationError::Kind::kModelViolation,
                            "zigzag strategy lost track of the bomb");
    }
    return sighting->direction * sighting->distance;
  }

  Directive arrived_at_source(const RobotView& v) {
    if (v.other_robot_here() && v.knows_other_speed()) {
      return resolve_meeting(v);
    }
    if (v.other_robot_here()) {
      return Directive::wait_forever();  // collocation resolves this instant
    }
    if (bomb_on_ground_here(v)) {
      state_ = State::kWaitingWindow;
      wake_time_ = v.time() + 2.0 / v.speed();
      return Directive::wait_until(wake_time_);
    }
    if (v.bomb_sighting().has_value() && v.knows_other_speed() && v.faster_than_other()) {
      state_ = State::kFetch;  // already knows everything it needs
      return Directive::move_to(bomb_position(v));
    }
    state_ = State::kAwaitPartner;  // zigzagging partner will return here
    return Directive::wait_forever();
  }

  Directive resolve_meeting(const RobotView& v) {
    if (v.faster_than_other()) {
      if (bomb_on_ground_here(v)) {
        state_ = State::kDeliverForever;
        return Directive::pick_up_bomb();
      }
      if (v.bomb_sighting().has_value()) {
        state_ = State::kFetch;
        return Directive::move_to(bomb_position(v));
      }
      state_ = State::kAwaitInfo;  // the slower robot shares next
      return Directive::wait_forever();
    }
    if (v.bomb_sighting().has_value()) {
      state_ = State::kIdle;
      return Directive::share_bomb_direction();
    }
    state_ = State::kIdle;
    return Directive::wait_forever();
  }

  ZigzagRounds rounds_;
  State state_ = State::kApproach;
  double wake_time_ = 0.0;
};

// ---------------------------------------------------------------------------
// Generic zigzag searcher (single robot): no waiting window, no cooperation;
// round k carries the bomb to x_k and returns to S.

class GenericZigzagRobot final : public RobotStrategy {
 public:
  explicit GenericZigzagRobot(ZigzagSchedule schedule) : rounds_(std::move(schedule)) {}

  Directive on_event(const RobotView& v, WakeReason why) override {
    switch (state_) {
      case State::kApproach:
        if (why == WakeReason::kArrived && at_source(v)) {
          if (!bomb_on_ground_here(v)) {
            state_ = State::kIdle;
            return Directive::wait_forever();
          }
          rounds_.start_round_one();
          state_ = State::kCarryOut;
          return Directive::pick_up_bomb();
        }
        return Directive::move_to(kSource);
      case State::kCarryOut:
        if (why == WakeReason::kArrived && v.holding_bomb()) {
          state_ = State::kReturnToS;
          drop_point_ = v.position();
          return Directive::set_down_bomb();
        }
        if (v.holding_bomb()) {
          return Directive::move_radially_outward_until(rounds_.current_turn_distance());
        }
        return Directive::move_radially_outward();
      case State::kReturnToS:
        if (why == WakeReason::kArrived && at_source(v)) {
          rounds_.next_round();
          state_ = State::kGoToBomb;
          return Directive::move_to(drop_point_);
        }
        return Directive::move_to(kSource);
      case State::kGoToBomb:
        if (why == WakeReason::kArrived && bomb_on_ground_here(v)) {
          state_ = State::kCarryOut;
          return Directive::pick_up_bomb();
        }
        return Directive::move_to(drop_point_);
      case State::kIdle:
        return Directive::wait_forever();
    }
    return Directive::wait_forever();
  }

 private:
  enum class State { kApproach, kCarryOut, kReturnToS, kGoToBomb, kIdle };

  ZigzagRounds rounds_;
  State state_ = State::kApproach;
  Vec2 drop_point_;
};

class IdleRobot final : public RobotStrategy {
 public:
  Directive on_event(const RobotView&, WakeReason) override { return Directive::wait_forever(); }
};

// ---------------------------------------------------------------------------
// Scripted execution of the offline optimal plan (full knowledge).

class OfflineAloneRunner final : public RobotStrategy {
 public:
  Directive on_event(const RobotView& v, WakeReason why) override {
    if (!arrived_) {
      if (why == WakeReason::kArrived && at_source(v)) {
        arrived_ = true;
        return Directive::pick_up_bomb();
      }
      return Directive::move_to(kSource);
    }
    return Directive::move_radially_outward();
  }

 private:
  bool arrived_ = false;
};

class OfflineHandoffSlow final : public RobotStrategy {
 public:
  explicit OfflineHandoffSlow(Vec2 meeting_point) : meeting_point_(meeting_point) {}

  Directive on_event(const RobotView& v, WakeReason why) override {
    switch (state_) {
      case State::kApproach:
        if (why == WakeReason::kArrived && at_source(v)) {
          state_ = State::kCarry;
          return Directive::pick_up_bomb();
        }
        return Directive::move_to(kSource);
      case State::kCarry:
        if (why == WakeReason::kArrived && v.position() == meeting_point_) {
          state_ = State::kDone;
          return Directive::set_down_bomb();
        }
        if (v.holding_bomb()) {
          return Directive::move_to(meeting_point_);
        }
        return Directive::wait_forever();
      case State::kDone:
        return Directive::wait_forever();
    }
    return Directive::wait_forever();
  }

 private:
  enum class State { kApproach, kCarry, kDone };

  Vec2 meeting_point_;
  State state_ = State::kApproach;
};

class OfflineHandoffFast final : public RobotStrategy {
 public:
  explicit OfflineHandoffFast(Vec2 meeting_point) : meeting_point_(meeting_point) {}

  Directive on_event(const RobotView& v, WakeReason why) override {
    switch (state_) {
      case State::kGoToMeeting:
        if ((why == WakeReason::kArrived || why == WakeReason::kViewChanged) &&
            v.position() == meeting_point_) {
          if (bomb_on_ground_here(v)) {
            state_ = State::kDeliver;
            return Directive::pick_up_bomb();
          }
          return Directive::wait_forever();  // slow robot is about to set it down
        }
        return Directive::move_to(meeting_point_);
      case State::kDeliver:
        return Directive::move_radially_outward();
    }
    return Directive::wait_forever();
  }

 private:
  enum class State { kGoToMeeting, kDeliver };

  Vec2 meeting_point_;
  State state_ = State::kGoToMeeting;
};

}  // namespace

// ---------------------------------------------------------------------------
// ZigzagSchedule

ZigzagSchedule ZigzagSchedule::geometric(double expansion_factor) {
  if (!(expansion_factor > 1.0)) {
    throw std::invalid_argument("zigzag schedule: expansion factor must be > 1");
  }
  ZigzagSchedule s;
  s.expansion_factor_ = expansion_factor;
  return s;
}

ZigzagSchedule ZigzagSchedule::explicit_list(std::vector<double> distances) {
  if (distances.empty()) {
    throw std::invalid_argument("zigzag schedule: empty turn-distance list");
  }
  double prev = 0.0;
  for (double x : distances) {
    if (!(x > prev)) {
      throw std::invalid_argument("zigzag schedule: turn distances must be strictly increasing and positive");
    }
    prev = x;
  }
  ZigzagSchedule s;
  s.explicit_ = std::move(distances);
  return s;
}

double ZigzagSchedule::turn_distance(int k) const {
  if (k < 1) {
    throw std::invalid_argument("zigzag schedule: rounds are 1-based");
  }
  if (is_geometric()) {
    return std::pow(expansion_factor_, k - 1);
  }
  if (static_cast<size_t>(k) > explicit_.size()) {
    throw SimulationError(SimulationError::Kind::kNontermination,
                          "zigzag schedule exhausted below the critical distance");
  }
  return explicit_[static_cast<size_t>(k - 1)];
}

int ZigzagSchedule::known_rounds() const {
  return is_geometric() ? INT_MAX : static_cast<int>(explicit_.size());
}

// ---------------------------------------------------------------------------
// Factories

std::optional<Algorithm> algorithm_from_id(const std::string& id) {
  if (id == "offline") return Algorithm::kOffline;
  if (id == "one-axis") return Algorithm::kOneAxis;
  if (id == "visible-wait") return Algorithm::kVisibleWait;
  if (id == "discoverable") return Algorithm::kDiscoverable;
  if (id == "invisible-zigzag") return Algorithm::kInvisibleZigzag;
  if (id == "generic-zigzag") return Algorithm::kGenericZigzag;
  return std::nullopt;
}

const char* algorithm_id(Algorithm alg) {
  switch (alg) {
    case Algorithm::kOffline: return "offline";
    case Algorithm::kOneAxis: return "one-axis";
    case Algorithm::kVisibleWait: return "visible-wait";
    case Algorithm::kDiscoverable: return "discoverable";
    case Algorithm::kInvisibleZigzag: return "invisible-zigzag";
    case Algorithm::kGenericZigzag: return "generic-zigzag";
  }
  return "offline";
}

bool algorithm_applicable(Algorithm alg, const KnowledgeConfig& knowledge) {
  switch (alg) {
    case Algorithm::kOffline:
    case Algorithm::kGenericZigzag:
      return true;
    case Algorithm::kOneAxis:
      return knowledge.axis == AxisModel::kOneAxis;
    case Algorithm::kVisibleWait:
      return knowledge.axis == AxisModel::kNoAxis &&
             knowledge.boundary == BoundaryModel::kVisible;
    case Algorithm::kDiscoverable:
      return knowledge.axis == AxisModel::kNoAxis &&
             knowledge.boundary == BoundaryModel::kDiscoverable;
    case Algorithm::kInvisibleZigzag:
      return knowledge.axis == AxisModel::kNoAxis &&
             knowledge.boundary == BoundaryModel::kInvisible;
  }
  return false;
}

StrategyPair make_one_axis_pair() {
  StrategyPair pair;
  pair.robots[0] = std::make_unique<OneAxisRobot>();
  pair.robots[1] = std::make_unique<OneAxisRobot>();
  return pair;
}

StrategyPair make_visible_wait_pair() {
  StrategyPair pair;
  pair.robots[0] = std::make_unique<VisibleWaitRobot>();
  pair.robots[1] = std::make_unique<VisibleWaitRobot>();
  return pair;
}

StrategyPair make_discoverable_pair() {
  StrategyPair pair;
  pair.robots[0] = std::make_unique<DiscoverableRobot>();
  pair.robots[1] = std::make_unique<DiscoverableRobot>();
  return pair;
}

StrategyPair make_invisible_zigzag_pair(double expansion_factor) {
  if (!(expansion_factor > 1.0)) {
    throw std::invalid_argument("invisible-zigzag: expansion factor must be > 1");
  }
  StrategyPair pair;
  pair.robots[0] = std::make_unique<InvisibleZigzagRobot>(expansion_factor);
  pair.robots[1] = std::make_unique<InvisibleZigzagRobot>(expansion_factor);
  return pair;
}

StrategyPair make_generic_zigzag_pair(const ZigzagSchedule& schedule) {
  StrategyPair pair;
  pair.robots[0] = std::make_unique<GenericZigzagRobot>(schedule);
  pair.robots[1] = std::make_unique<IdleRobot>();
  return pair;
}

StrategyPair make_offline_pair(const Instance& inst) {
  const OfflinePlanShape shape = offline_plan_shape(inst);
  StrategyPair pair;
  switch (shape.mode) {
    case OfflineMode::kFastAlone: {
      pair.robots[static_cast<size_t>(inst.fast_index())] = std::make_unique<OfflineAloneRunner>();
      pair.robots[static_cast<size_t>(inst.slow_index())] = std::make_unique<IdleRobot>();
      return pair;
    }
    case OfflineMode::kSlowAlone: {
      pair.robots[static_cast<size_t>(inst.slow_index())] = std::make_unique<OfflineAloneRunner>();
      pair.robots[static_cast<size_t>(inst.fast_index())] = std::make_unique<IdleRobot>();
      return pair;
    }
    case OfflineMode::kHandoff: {
      pair.robots[static_cast<size_t>(inst.slow_index())] =
          std::make_unique<OfflineHandoffSlow>(shape.handoff->point);
      pair.robots[static_cast<size_t>(inst.fast_index())] =
          std::make_unique<OfflineHandoffFast>(shape.handoff->point);
      return pair;
    }
  }
  return pair;
}

StrategyPair make_strategy_pair(Algorithm alg, const Instance& inst, const StrategyParams& params) {
  if (!algorithm_applicable(alg, inst.knowledge)) {
    throw std::invalid_argument(std::string(algorithm_id(alg)) +
                                ": not applicable under this knowledge configuration");
  }
  switch (alg) {
    case Algorithm::kOffline: return make_offline_pair(inst);
    case Algorithm::kOneAxis: return make_one_axis_pair();
    case Algorithm::kVisibleWait: return make_visible_wait_pair();
    case Algorithm::kDiscoverable: return make_discoverable_pair();
    case Algorithm::kInvisibleZigzag: return make_invisible_zigzag_pair(params.expansion_factor);
    case Algorithm::kGenericZigzag:
      return make_generic_zigzag_pair(
          params.schedule.value_or(ZigzagSchedule::geometric(params.expansion_factor)));
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace bombsquad
