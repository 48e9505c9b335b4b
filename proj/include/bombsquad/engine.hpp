#ifndef BOMBSQUAD_ENGINE_HPP_
#define BOMBSQUAD_ENGINE_HPP_

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>

#include "bombsquad/core.hpp"
#include "bombsquad/outcome.hpp"

namespace bombsquad {

// Continuous-time, event-driven simulator. Robots move on exact linear
// segments between events; every event time (arrival, collocation, boundary
// crossing, wake-up) is the root of a closed-form expression, never a sampled
// step. Simultaneous events are processed in a fixed order: bomb delivery,
// then boundary crossings, arrivals, collocations, wake-ups; within a class
// robot 0 precedes robot 1.

struct SimConfig {
  int max_events = 10000;
  double collocation_tolerance = 1e-9;
  double horizon_time = 1e9;
};

class SimulationError : public std::runtime_error {
 public:
  enum class Kind { kNontermination, kTimeout, kModelViolation };

  SimulationError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// What a robot remembers about the bomb after setting it down (or being told
/// face-to-face): unit direction from S and distance from S.
struct BombSighting {
  Vec2 direction{1.0, 0.0};
  double distance = 0.0;
};

/// Everything a robot is allowed to observe when its strategy is queried.
/// Accessors that would reveal knowledge the model forbids throw a
/// model-violation error.
class RobotView {
 public:
  int id() const { return id_; }
  double time() const { return time_; }
  Vec2 position() const { return position_; }
  double speed() const { return speed_; }
  bool holding_bomb() const { return holding_bomb_; }

  AxisModel axis_model() const { return knowledge_.axis; }
  BoundaryModel boundary_model() const { return knowledge_.boundary; }

  bool knows_other_speed() const { return knows_other_speed_; }
  double other_speed() const;
  /// Speed comparison with the deterministic tie-break (lower index counts as
  /// slower). Requires a past collocation.
  bool faster_than_other() const;

  bool boundary_discovered() const { return boundary_discovered_; }
  /// D, available under Visible always, under Discoverable once discovered,
  /// and never under Invisible.
  double critical_distance() const;

  /// Bomb within collocation tolerance of this robot (on the ground, held by
  /// this robot, or held by a collocated robot).
  bool bomb_at_my_position() const { return bomb_here_; }
  bool other_robot_here() const { return other_here_; }
  bool other_here_holding_bomb() const { return other_here_holding_bomb_; }
  /// Exact position of the other robot, observable only face-to-face.
  Vec2 other_position() const;

  const std::optional<BombSighting>& bomb_sighting() const { return bomb_sighting_; }

 private:
  friend class Engine;

  int id_ = 0;
  double time_ = 0.0;
  Vec2 position_;
  double speed_ = 1.0;
  bool holding_bomb_ = false;
  KnowledgeConfig knowledge_;
  bool knows_other_speed_ = false;
  double other_speed_ = 0.0;
  bool boundary_discovered_ = false;
  double discovered_distance_ = 0.0;
  bool bomb_here_ = false;
  bool other_here_ = false;
  bool other_here_holding_bomb_ = false;
  Vec2 other_position_;
  std::optional<BombSighting> bomb_sighting_;
};

struct Directive {
  enum class Kind {
    kMoveTo,
    kMoveRadiallyOutward,
    kWaitUntil,
    kWaitForever,
    kPickUpBomb,
    kSetDownBomb,
    kShareBombDirection,
  };

  Kind kind = Kind::kWaitForever;
  Vec2 target;                          // kMoveTo
  std::optional<double> radial_limit;   // kMoveRadiallyOutward; nullopt = forever
  double wake_time = 0.0;               // kWaitUntil

  static Directive move_to(Vec2 point) { return {Kind::kMoveTo, point, {}, 0.0}; }
  static Directive move_radially_outward() { return {Kind::kMoveRadiallyOutward, {}, {}, 0.0}; }
  static Directive move_radially_outward_until(double dist) {
    return {Kind::kMoveRadiallyOutward, {}, dist, 0.0};
  }
  static Directive wait_until(double t) { return {Kind::kWaitUntil, {}, {}, t}; }
  static Directive wait_forever() { return {Kind::kWaitForever, {}, {}, 0.0}; }
  static Directive pick_up_bomb() { return {Kind::kPickUpBomb, {}, {}, 0.0}; }
  static Directive set_down_bomb() { return {Kind::kSetDownBomb, {}, {}, 0.0}; }
  static Directive share_bomb_direction() { return {Kind::kShareBombDirection, {}, {}, 0.0}; }
};

/// Why a strategy is being queried.
enum class WakeReason {
  kStart,
  kArrived,
  kCollocated,
  kTimer,
  kBoundaryDiscovered,
  kViewChanged,  // custody or shared knowledge changed under you
};

class RobotStrategy {
 public:
  virtual ~RobotStrategy() = default;
  virtual Directive on_event(const RobotView& view, WakeReason reason) = 0;
};

struct StrategyPair {
  std::array<std::unique_ptr<RobotStrategy>, 2> robots;
};

/// Earliest t >= t0 at which two constant-velocity agents come within
/// `tolerance` of each other, from the closed-form minimum of the squared-gap
/// quadratic. Empty if the gap never shrinks to the tolerance.
std::optional<double> collocation_time(Vec2 p1, Vec2 v1, Vec2 p2, Vec2 v2, double t0,
                                       double tolerance = 1e-9);

/// Runs the pair of strategies on the instance until the bomb first reaches
/// distance D from the source. Throws SimulationError on nontermination,
/// horizon overrun, or a forbidden knowledge read.
DeliveryOutcome simulate(const Instance& inst, StrategyPair& strategies,
                         const SimConfig& cfg = {});

}  // namespace bombsquad

#endif  // BOMBSQUAD_ENGINE_HPP_
