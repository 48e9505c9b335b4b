#include "bombsquad/outcome.hpp"

#include <cstdio>

namespace bombsquad {

const char* event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::kArriveSource: return "arrive_source";
    case EventKind::kCollocate: return "collocate";
    case EventKind::kBombPickup: return "bomb_pickup";
    case EventKind::kBombSetDown: return "bomb_setdown";
    case EventKind::kBoundaryDiscovery: return "boundary_discovery";
    case EventKind::kDelivery: return "delivery";
  }
  return "unknown";
}

std::string events_to_jsonl(const DeliveryOutcome& outcome) {
  std::string out;
  char line[256];
  for (const Event& e : outcome.events) {
    std::snprintf(line, sizeof(line),
                  "{\"t\":%.17g,\"kind\":\"%s\",\"robot\":%d,\"x\":%.17g,\"y\":%.17g}\n",
                  e.time, event_kind_name(e.kind), e.robot, e.position.x, e.position.y);
    out += line;
  }
  return out;
}

}  // namespace bombsquad
