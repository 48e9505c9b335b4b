#include "bombsquad/core.hpp"

#include <cmath>

namespace bombsquad {

namespace {

void require(bool ok, const char* message) {
  if (!ok) {
    throw std::invalid_argument(message);
  }
}

}  // namespace

void validate_instance(const Instance& inst) {
  require(std::isfinite(inst.critical_distance), "critical_distance: must be finite");
  require(inst.critical_distance > 0.0, "critical_distance: must be > 0");
  for (size_t i = 0; i < inst.robots.size(); ++i) {
    const RobotSpec& r = inst.robots[i];
    const std::string where = "robots[" + std::to_string(i) + "]";
    if (!std::isfinite(r.start.x)) throw std::invalid_argument(where + ".x: must be finite");
    if (!std::isfinite(r.start.y)) throw std::invalid_argument(where + ".y: must be finite");
    if (!std::isfinite(r.speed)) throw std::invalid_argument(where + ".speed: must be finite");
    if (!(r.speed > 0.0)) throw std::invalid_argument(where + ".speed: must be > 0");
  }
  if (inst.knowledge.boundary == BoundaryModel::kInvisible) {
    // The invisible model has no constant-competitive algorithm without a
    // known lower bound on D; the common unit anchors D >= 1.
    require(inst.critical_distance >= 1.0,
            "critical_distance: must be >= 1 under the invisible boundary model");
  }
}

NormalizedInstance normalize_instance(const Instance& inst) {
  const double v_max = std::max(inst.robots[0].speed, inst.robots[1].speed);
  Instance out = inst;
  out.robots[0].speed = inst.robots[0].speed / v_max;
  out.robots[1].speed = inst.robots[1].speed / v_max;
  return {out, v_max};
}

std::string to_string(AxisModel axis) {
  return axis == AxisModel::kOneAxis ? "one" : "none";
}

std::string to_string(BoundaryModel boundary) {
  switch (boundary) {
    case BoundaryModel::kVisible: return "visible";
    case BoundaryModel::kDiscoverable: return "discoverable";
    case BoundaryModel::kInvisible: return "invisible";
  }
  return "visible";
}

}  // namespace bombsquad
