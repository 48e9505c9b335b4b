#include "bombsquad/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bombsquad {

namespace {

using nlohmann::json;

double finite_number(const json& node, const std::string& field) {
  if (!node.is_number()) {
    throw std::invalid_argument(field + ": expected a number");
  }
  const double value = node.get<double>();
  if (!std::isfinite(value)) {
    throw std::invalid_argument(field + ": must be finite");
  }
  return value;
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("instance: invalid JSON: ") + err.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("instance: expected a JSON object");
  }

  Instance inst;
  if (!doc.contains("critical_distance")) {
    throw std::invalid_argument("critical_distance: missing");
  }
  inst.critical_distance = finite_number(doc["critical_distance"], "critical_distance");

  if (!doc.contains("robots") || !doc["robots"].is_array() || doc["robots"].size() != 2) {
    throw std::invalid_argument("robots: expected an array of exactly 2 robots");
  }
  for (size_t i = 0; i < 2; ++i) {
    const json& r = doc["robots"][i];
    const std::string where = "robots[" + std::to_string(i) + "]";
    if (!r.is_object()) throw std::invalid_argument(where + ": expected an object");
    for (const char* key : {"x", "y", "speed"}) {
      if (!r.contains(key)) throw std::invalid_argument(where + "." + key + ": missing");
    }
    inst.robots[i].start.x = finite_number(r["x"], where + ".x");
    inst.robots[i].start.y = finite_number(r["y"], where + ".y");
    inst.robots[i].speed = finite_number(r["speed"], where + ".speed");
  }

  if (!doc.contains("axis") || !doc["axis"].is_string()) {
    throw std::invalid_argument("axis: expected \"one\" or \"none\"");
  }
  const std::string axis = doc["axis"].get<std::string>();
  if (axis == "one") {
    inst.knowledge.axis = AxisModel::kOneAxis;
  } else if (axis == "none") {
    inst.knowledge.axis = AxisModel::kNoAxis;
  } else {
    throw std::invalid_argument("axis: expected \"one\" or \"none\"");
  }

  if (!doc.contains("boundary") || !doc["boundary"].is_string()) {
    throw std::invalid_argument("boundary: expected \"visible\", \"discoverable\" or \"invisible\"");
  }
  const std::string boundary = doc["boundary"].get<std::string>();
  if (boundary == "visible") {
    inst.knowledge.boundary = BoundaryModel::kVisible;
  } else if (boundary == "discoverable") {
    inst.knowledge.boundary = BoundaryModel::kDiscoverable;
  } else if (boundary == "invisible") {
    inst.knowledge.boundary = BoundaryModel::kInvisible;
  } else {
    throw std::invalid_argument("boundary: expected \"visible\", \"discoverable\" or \"invisible\"");
  }

  validate_instance(inst);
  return inst;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("instance: cannot open file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_json(buffer.str());
}

std::string instance_to_json(const Instance& inst) {
  nlohmann::ordered_json doc;
  doc["critical_distance"] = inst.critical_distance;
  doc["robots"] = nlohmann::ordered_json::array();
  for (const RobotSpec& r : inst.robots) {
    doc["robots"].push_back({{"x", r.start.x}, {"y", r.start.y}, {"speed", r.speed}});
  }
  doc["axis"] = to_string(inst.knowledge.axis);
  doc["boundary"] = to_string(inst.knowledge.boundary);
  return doc.dump();
}

}  // namespace bombsquad
