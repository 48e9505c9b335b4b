#ifndef BOMBSQUAD_OUTCOME_HPP_
#define BOMBSQUAD_OUTCOME_HPP_

#include <array>
#include <string>
#include <vector>

#include "bombsquad/geometry.hpp"
#include "bombsquad/trajectory.hpp"

namespace bombsquad {

enum class EventKind {
  kArriveSource,
  kCollocate,
  kBombPickup,
  kBombSetDown,
  kBoundaryDiscovery,
  kDelivery,
};

const char* event_kind_name(EventKind kind);

struct Event {
  EventKind kind;
  double time = 0.0;
  Vec2 position;
  int robot = -1;  // -1 for joint events (collocation)
};

/// Full record of one simulated delivery: when the bomb reached the boundary,
/// what happened along the way, and the exact paths everyone took.
struct DeliveryOutcome {
  double delivery_time = 0.0;
  std::vector<Event> events;
  std::array<Trajectory, 2> robot_trajectories;
  Trajectory bomb_trajectory;
};

/// One event per line: {"t":..., "kind":..., "robot":..., "x":..., "y":...}
std::string events_to_jsonl(const DeliveryOutcome& outcome);

}  // namespace bombsquad

#endif  // BOMBSQUAD_OUTCOME_HPP_
