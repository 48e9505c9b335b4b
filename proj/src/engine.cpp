#include "bombsquad/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bombsquad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Earliest root of |p + v s| = radius with s in [0, horizon], if any.
std::optional<double> radius_crossing(const Vec2& p, const Vec2& v, double radius) {
  const double a = v.norm_sq();
  if (a == 0.0) {
    return std::nullopt;
  }
  const double b = 2.0 * dot(p, v);
  const double c = p.norm_sq() - radius * radius;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    return std::nullopt;
  }
  const double root = std::sqrt(disc);
  const double s1 = (-b - root) / (2.0 * a);
  const double s2 = (-b + root) / (2.0 * a);
  // Allow a whisker of negative slack so "currently on the circle" fires now.
  constexpr double kSlack = -1e-12;
  if (s1 >= kSlack) return std::max(s1, 0.0);
  if (s2 >= kSlack) return std::max(s2, 0.0);
  return std::nullopt;
}

}  // namespace

double RobotView::other_speed() const {
  if (!knows_other_speed_) {
    throw SimulationError(SimulationError::Kind::kModelViolation,
                          "strategy read the other robot's speed before any collocation");
  }
  return other_speed_;
}

bool RobotView::faster_than_other() const {
  const double other = other_speed();
  if (speed_ != other) {
    return speed_ > other;
  }
  return id_ > 0;  // ties: lower index counts as slower
}

Vec2 RobotView::other_position() const {
  if (!other_here_) {
    throw SimulationError(SimulationError::Kind::kModelViolation,
                          "strategy read the other robot's position while apart");
  }
  return other_position_;
}

double RobotView::critical_distance() const {
  if (knowledge_.boundary == BoundaryModel::kInvisible || !boundary_discovered_) {
    throw SimulationError(SimulationError::Kind::kModelViolation,
                          "strategy read the critical distance without knowing it");
  }
  return discovered_distance_;
}

std::optional<double> collocation_time(Vec2 p1, Vec2 v1, Vec2 p2, Vec2 v2, double t0,
                                       double tolerance) {
  const Vec2 dp = p1 - p2;
  const Vec2 dv = v1 - v2;
  const double tol2 = tolerance * tolerance;
  const double c = dp.norm_sq();
  if (c <= tol2) {
    return t0;
  }
  const double a = dv.norm_sq();
  if (a == 0.0) {
    return std::nullopt;
  }
  const double b = 2.0 * dot(dp, dv);
  if (b >= 0.0) {
    return std::nullopt;  // gap is not shrinking
  }
  const double s_min = -b / (2.0 * a);
  const double f_min = c - (b * b) / (4.0 * a);
  if (f_min > tol2) {
    return std::nullopt;
  }
  // Aim inside the tolerance disk (half the radius) so the contact is still
  // within tolerance after rounding; shallow near-misses use the closest
  // approach itself.
  const double inner2 = tol2 * 0.25;
  double s_hit = f_min <= inner2 ? s_min - std::sqrt((inner2 - f_min) / a) : s_min;
  s_hit = std::max(s_hit, 0.0);
  return t0 + s_hit;
}

class Engine {
 public:
  Engine(const Instance& inst, StrategyPair& strategies, const SimConfig& cfg)
      : inst_(inst), strategies_(strategies), cfg_(cfg) {}

  DeliveryOutcome run();

 private:
  enum class MotionKind { kIdle, kMoveTo, kMoveRadial, kWaitTimer };

  struct Robot {
    Vec2 position;
    double speed = 1.0;
    Vec2 velocity;
    MotionKind motion = MotionKind::kIdle;
    double segment_end = kInf;  // arrival or wake time; +inf when idle
    Vec2 snap_target;           // exact position at a move's end
    bool knows_other_speed = false;
    bool boundary_discovered = false;
    std::optional<BombSighting> sighting;
    bool dirty = false;
  };

  struct Candidate {
    double time = kInf;
    int klass = 99;  // 0 delivery, 1 discovery, 2 arrival, 3 collocation, 4 wake
    int who = 0;
  };

  RobotView view_of(int i) const;
  void query(int i, WakeReason reason);
  void drain_dirty();
  void install(int i, const Directive& d);
  void apply_pickup(int i);
  void apply_setdown(int i);
  void apply_share(int i);
  void spend_event(const char* what);
  void advance_to(double t);
  void record_state();
  void append_breakpoint(Trajectory& traj, const Vec2& pos);
  bool robots_within_tolerance() const;
  Candidate next_candidate() const;
  void log(EventKind kind, Vec2 pos, int robot);

  const Instance& inst_;
  StrategyPair& strategies_;
  SimConfig cfg_;

  double now_ = 0.0;
  std::array<Robot, 2> robots_;
  Vec2 bomb_pos_;
  int holder_ = -1;
  bool in_contact_ = false;
  int events_spent_ = 0;
  DeliveryOutcome outcome_;
};

RobotView Engine::view_of(int i) const {
  const Robot& me = robots_[static_cast<size_t>(i)];
  const Robot& other = robots_[static_cast<size_t>(1 - i)];
  RobotView v;
  v.id_ = i;
  v.time_ = now_;
  v.position_ = me.position;
  v.speed_ = me.speed;
  v.holding_bomb_ = holder_ == i;
  v.knowledge_ = inst_.knowledge;
  v.knows_other_speed_ = me.knows_other_speed;
  v.other_speed_ = me.knows_other_speed ? other.speed : 0.0;
  v.boundary_discovered_ = me.boundary_discovered;
  v.discovered_distance_ = me.boundary_discovered ? inst_.critical_distance : 0.0;
  v.bomb_here_ = distance(bomb_pos_, me.position) <= cfg_.collocation_tolerance;
  v.other_here_ = distance(other.position, me.position) <= cfg_.collocation_tolerance;
  v.other_here_holding_bomb_ = v.other_here_ && holder_ == 1 - i;
  v.other_position_ = other.position;
  v.bomb_sighting_ = me.sighting;
  return v;
}

void Engine::spend_event(const char* what) {
  if (++events_spent_ > cfg_.max_events) {
    throw SimulationError(SimulationError::Kind::kNontermination,
                          std::string("event budget exceeded at: ") + what);
  }
}

void Engine::log(EventKind kind, Vec2 pos, int robot) {
  outcome_.events.push_back(Event{kind, now_, pos, robot});
}

void Engine::append_breakpoint(Trajectory& traj, const Vec2& pos) {
  auto& bps = traj.breakpoints;
  if (!bps.empty() && bps.back().time == now_) {
    bps.back().position = pos;  // same-instant refinement (snap, handoff)
    return;
  }
  bps.push_back({now_, pos});
}

void Engine::record_state() {
  append_breakpoint(outcome_.robot_trajectories[0], robots_[0].position);
  append_breakpoint(outcome_.robot_trajectories[1], robots_[1].position);
  append_breakpoint(outcome_.bomb_trajectory, bomb_pos_);
}

void Engine::advance_to(double t) {
  for (Robot& r : robots_) {
    r.position = r.position + r.velocity * (t - now_);
  }
  now_ = t;
  if (holder_ >= 0) {
    bomb_pos_ = robots_[static_cast<size_t>(holder_)].position;
  }
}

bool Engine::robots_within_tolerance() const {
  return distance(robots_[0].position, robots_[1].position) <= cfg_.collocation_tolerance;
}

void Engine::install(int i, const Directive& d) {
  Robot& r = robots_[static_cast<size_t>(i)];
  switch (d.kind) {
    case Directive::Kind::kMoveTo: {
      const double dist = distance(d.target, r.position);
      r.motion = MotionKind::kMoveTo;
      r.snap_target = d.target;
      if (dist == 0.0) {
        r.velocity = {0.0, 0.0};
        r.segment_end = now_;
      } else {
        r.velocity = (d.target - r.position) * (r.speed / dist);
        r.segment_end = now_ + dist / r.speed;
      }
      return;
    }
    case Directive::Kind::kMoveRadiallyOutward: {
      const double radius = r.position.norm();
      const Vec2 dir = radius > 0.0 ? r.position * (1.0 / radius) : Vec2{1.0, 0.0};
      r.velocity = dir * r.speed;
      if (d.radial_limit.has_value()) {
        const double limit = *d.radial_limit;
        r.motion = MotionKind::kMoveTo;  // ends with an arrival at dir * limit
        r.snap_target = dir * limit;
        r.segment_end = limit > radius ? now_ + (limit - radius) / r.speed : now_;
        if (limit <= radius) {
          r.velocity = {0.0, 0.0};
          r.snap_target = r.position;
        }
      } else {
        r.motion = MotionKind::kMoveRadial;
        r.segment_end = kInf;
      }
      return;
    }
    case Directive::Kind::kWaitUntil:
      r.motion = MotionKind::kWaitTimer;
      r.velocity = {0.0, 0.0};
      r.segment_end = std::max(d.wake_time, now_);
      return;
    case Directive::Kind::kWaitForever:
      r.motion = MotionKind::kIdle;
      r.velocity = {0.0, 0.0};
      r.segment_end = kInf;
      return;
    default:
      // Instantaneous directives are consumed by query(); reaching here is a
      // strategy bug.
      throw SimulationError(SimulationError::Kind::kModelViolation,
                            "instantaneous directive escaped the query loop");
  }
}

void Engine::apply_pickup(int i) {
  Robot& r = robots_[static_cast<size_t>(i)];
  if (distance(bomb_pos_, r.position) > cfg_.collocation_tolerance) {
    throw SimulationError(SimulationError::Kind::kModelViolation,
                          "pick_up_bomb while not collocated with the bomb");
  }
  const int other = 1 - i;
  if (holder_ == other) {
    robots_[static_cast<size_t>(other)].dirty = true;  // custody taken from it
  }
  holder_ = i;
  bomb_pos_ = r.position;
  const double dist = r.position.norm();
  r.sighting = BombSighting{dist > 0.0 ? r.position * (1.0 / dist) : Vec2{1.0, 0.0}, dist};
  if (distance(robots_[static_cast<size_t>(other)].position, r.position) <=
      cfg_.collocation_tolerance) {
    robots_[static_cast<size_t>(other)].dirty = true;
  }
  log(EventKind::kBombPickup, bomb_pos_, i);
  record_state();
}

void Engine::apply_setdown(int i) {
  if (holder_ != i) {
    throw SimulationError(SimulationError::Kind::kModelViolation,
                          "set_down_bomb while not holding it");
  }
  Robot& r = robots_[static_cast<size_t>(i)];
  holder_ = -1;
  bomb_pos_ = r.position;
  const double dist = r.position.norm();
  r.sighting = BombSighting{dist > 0.0 ? r.position * (1.0 / dist) : Vec2{1.0, 0.0}, dist};
  if (distance(robots_[static_cast<size_t>(1 - i)].position, r.position) <=
      cfg_.collocation_tolerance) {
    robots_[static_cast<size_t>(1 - i)].dirty = true;
  }
  log(EventKind::kBombSetDown, bomb_pos_, i);
  record_state();
}

void Engine::apply_share(int i) {
  Robot& r = robots_[static_cast<size_t>(i)];
  Robot& other = robots_[static_cast<size_t>(1 - i)];
  if (!robots_within_tolerance()) {
    throw SimulationError(SimulationError::Kind::kModelViolation,
                          "share_bomb_direction while not collocated");
  }
  std::optional<BombSighting> known = r.sighting;
  if (holder_ == i) {
    const double dist = r.position.norm();
    known = BombSighting{dist > 0.0 ? r.position * (1.0 / dist) : Vec2{1.0, 0.0}, dist};
  }
  if (!known.has_value()) {
    throw SimulationError(SimulationError::Kind::kModelViolation,
                          "share_bomb_direction with no bomb sighting to share");
  }
  other.sighting = known;
  other.dirty = true;
}

void Engine::query(int i, WakeReason reason) {
  for (;;) {
    spend_event("strategy query");
    const Directive d = strategies_.robots[static_cast<size_t>(i)]->on_event(view_of(i), reason);
    switch (d.kind) {
      case Directive::Kind::kPickUpBomb:
        apply_pickup(i);
        reason = WakeReason::kViewChanged;
        continue;
      case Directive::Kind::kSetDownBomb:
        apply_setdown(i);
        reason = WakeReason::kViewChanged;
        continue;
      case Directive::Kind::kShareBombDirection:
        apply_share(i);
        reason = WakeReason::kViewChanged;
        continue;
      default:
        install(i, d);
        return;
    }
  }
}

void Engine::drain_dirty() {
  for (bool progressed = true; progressed;) {
    progressed = false;
    for (int i = 0; i < 2; ++i) {
      if (robots_[static_cast<size_t>(i)].dirty) {
        robots_[static_cast<size_t>(i)].dirty = false;
        query(i, WakeReason::kViewChanged);
        progressed = true;
      }
    }
  }
}

Engine::Candidate Engine::next_candidate() const {
  Candidate best;
  auto consider = [&best](double t, int klass, int who) {
    if (t < best.time || (t == best.time && (klass < best.klass ||
                                             (klass == best.klass && who < best.who)))) {
      best = Candidate{t, klass, who};
    }
  };

  // Bomb reaching the boundary ends the run; the referee knows D in every
  // knowledge model.
  if (holder_ >= 0) {
    const Robot& carrier = robots_[static_cast<size_t>(holder_)];
    if (bomb_pos_.norm_sq() >= inst_.critical_distance * inst_.critical_distance) {
      consider(now_, 0, 0);
    } else if (auto s = radius_crossing(bomb_pos_, carrier.velocity, inst_.critical_distance)) {
      consider(now_ + *s, 0, 0);
    }
  }

  if (inst_.knowledge.boundary == BoundaryModel::kDiscoverable) {
    for (int i = 0; i < 2; ++i) {
      const Robot& r = robots_[static_cast<size_t>(i)];
      if (r.boundary_discovered) continue;
      if (auto s = radius_crossing(r.position, r.velocity, inst_.critical_distance)) {
        consider(now_ + *s, 1, i);
      }
    }
  }

  for (int i = 0; i < 2; ++i) {
    const Robot& r = robots_[static_cast<size_t>(i)];
    if (r.segment_end < kInf) {
      consider(r.segment_end, r.motion == MotionKind::kWaitTimer ? 4 : 2, i);
    }
  }

  if (!in_contact_) {
    if (auto t = collocation_time(robots_[0].position, robots_[0].velocity,
                                  robots_[1].position, robots_[1].velocity, now_,
                                  cfg_.collocation_tolerance)) {
      consider(*t, 3, 0);
    }
  }

  return best;
}

DeliveryOutcome Engine::run() {
  for (int i = 0; i < 2; ++i) {
    robots_[static_cast<size_t>(i)].position = inst_.robots[static_cast<size_t>(i)].start;
    robots_[static_cast<size_t>(i)].speed = inst_.robots[static_cast<size_t>(i)].speed;
  }
  bomb_pos_ = {0.0, 0.0};

  if (inst_.knowledge.boundary == BoundaryModel::kVisible) {
    robots_[0].boundary_discovered = true;
    robots_[1].boundary_discovered = true;
  } else if (inst_.knowledge.boundary == BoundaryModel::kDiscoverable) {
    for (int i = 0; i < 2; ++i) {
      Robot& r = robots_[static_cast<size_t>(i)];
      if (std::fabs(r.position.norm() - inst_.critical_distance) <=
          scaled_tolerance(inst_.critical_distance)) {
        r.boundary_discovered = true;
        log(EventKind::kBoundaryDiscovery, r.position, i);
      }
    }
  }

  record_state();
  query(0, WakeReason::kStart);
  query(1, WakeReason::kStart);
  drain_dirty();

  for (;;) {
    const Candidate next = next_candidate();
    if (next.time == kInf) {
      throw SimulationError(SimulationError::Kind::kNontermination,
                            "no pending events; strategies are deadlocked");
    }
    if (next.time > cfg_.horizon_time) {
      throw SimulationError(SimulationError::Kind::kTimeout,
                            "simulation horizon exceeded before delivery");
    }
    spend_event("main loop");
    advance_to(next.time);
    if (in_contact_ && !robots_within_tolerance()) {
      in_contact_ = false;
    }

    switch (next.klass) {
      case 0: {  // delivery
        const double radius = bomb_pos_.norm();
        if (radius > 0.0) {
          bomb_pos_ = bomb_pos_ * (inst_.critical_distance / radius);
        }
        record_state();
        outcome_.delivery_time = now_;
        log(EventKind::kDelivery, bomb_pos_, holder_);
        return outcome_;
      }
      case 1: {  // boundary discovery by crossing
        Robot& r = robots_[static_cast<size_t>(next.who)];
        r.boundary_discovered = true;
        record_state();
        log(EventKind::kBoundaryDiscovery, r.position, next.who);
        query(next.who, WakeReason::kBoundaryDiscovered);
        break;
      }
      case 2: {  // arrival at a move target
        Robot& r = robots_[static_cast<size_t>(next.who)];
        r.position = r.snap_target;
        if (holder_ == next.who) {
          bomb_pos_ = r.position;
        }
        r.velocity = {0.0, 0.0};
        r.motion = MotionKind::kIdle;
        r.segment_end = kInf;
        record_state();
        if (r.position == Vec2{0.0, 0.0}) {
          log(EventKind::kArriveSource, r.position, next.who);
        }
        query(next.who, WakeReason::kArrived);
        // An arrival in the other robot's face is observable.
        if (robots_within_tolerance()) {
          robots_[static_cast<size_t>(1 - next.who)].dirty = true;
        }
        break;
      }
      case 3: {  // collocation
        in_contact_ = true;
        record_state();
        log(EventKind::kCollocate, robots_[0].position, -1);
        robots_[0].knows_other_speed = true;
        robots_[1].knows_other_speed = true;
        for (int i = 0; i < 2; ++i) {
          Robot& learner = robots_[static_cast<size_t>(i)];
          const Robot& informed = robots_[static_cast<size_t>(1 - i)];
          if (informed.boundary_discovered && !learner.boundary_discovered) {
            learner.boundary_discovered = true;
            log(EventKind::kBoundaryDiscovery, learner.position, i);
          }
        }
        query(0, WakeReason::kCollocated);
        query(1, WakeReason::kCollocated);
        break;
      }
      case 4: {  // wake-up timer
        Robot& r = robots_[static_cast<size_t>(next.who)];
        r.motion = MotionKind::kIdle;
        r.segment_end = kInf;
        record_state();
        query(next.who, WakeReason::kTimer);
        break;
      }
      default:
        break;
    }

    drain_dirty();
  }
}

DeliveryOutcome simulate(const Instance& inst, StrategyPair& strategies, const SimConfig& cfg) {
  validate_instance(inst);
  Engine engine(inst, strategies, cfg);
  return engine.run();
}

}  // namespace bombsquad
