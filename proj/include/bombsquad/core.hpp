#ifndef BOMBSQUAD_CORE_HPP_
#define BOMBSQUAD_CORE_HPP_

#include <array>
#include <stdexcept>
#include <string>

#include "bombsquad/geometry.hpp"

namespace bombsquad {

enum class AxisModel { kOneAxis, kNoAxis };

enum class BoundaryModel { kVisible, kDiscoverable, kInvisible };

struct KnowledgeConfig {
  AxisModel axis = AxisModel::kNoAxis;
  BoundaryModel boundary = BoundaryModel::kVisible;

  constexpr bool operator==(const KnowledgeConfig&) const = default;
};

/// One robot: start position (source-centered coordinates) and maximum speed.
struct RobotSpec {
  Vec2 start;
  double speed = 1.0;

  double start_distance() const { return start.norm(); }
};

/// A problem instance. The source S is fixed at the origin by convention; the
/// bomb starts there and must reach distance `critical_distance` from it.
struct Instance {
  double critical_distance = 1.0;
  std::array<RobotSpec, 2> robots;
  KnowledgeConfig knowledge;

  /// Index of the slower robot; speed ties break toward the lower index.
  int slow_index() const { return robots[1].speed < robots[0].speed ? 1 : 0; }
  int fast_index() const { return 1 - slow_index(); }

  const RobotSpec& slow() const { return robots[static_cast<size_t>(slow_index())]; }
  const RobotSpec& fast() const { return robots[static_cast<size_t>(fast_index())]; }
};

/// Throws std::invalid_argument naming the offending field.
void validate_instance(const Instance& inst);

/// Rescales both speeds so the faster one becomes 1. Distances (and D) are
/// unchanged, so delivery times satisfy T_normalized = T_original * time_scale
/// with time_scale = max(v_1, v_2) of the original instance.
struct NormalizedInstance {
  Instance instance;
  double time_scale = 1.0;
};
NormalizedInstance normalize_instance(const Instance& inst);

std::string to_string(AxisModel axis);
std::string to_string(BoundaryModel boundary);

}  // namespace bombsquad

#endif  // BOMBSQUAD_CORE_HPP_
