#ifndef BOMBSQUAD_INSTANCE_IO_HPP_
#define BOMBSQUAD_INSTANCE_IO_HPP_

#include <string>

#include "bombsquad/core.hpp"

namespace bombsquad {

/// Document shape:
///   {"critical_distance": number,
///    "robots": [{"x": number, "y": number, "speed": number} x2],
///    "axis": "one"|"none",
///    "boundary": "visible"|"discoverable"|"invisible"}
/// Rejects non-finite numbers and violated invariants, naming the field.
Instance parse_instance_json(const std::string& text);

Instance load_instance_file(const std::string& path);

std::string instance_to_json(const Instance& inst);

}  // namespace bombsquad

#endif  // BOMBSQUAD_INSTANCE_IO_HPP_
