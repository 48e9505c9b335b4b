#ifndef BOMBSQUAD_STRATEGIES_HPP_
#define BOMBSQUAD_STRATEGIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bombsquad/engine.hpp"
#include "bombsquad/offline.hpp"

namespace bombsquad {

/// Optimal expansion factor for the invisible-boundary zigzag, (3 + sqrt(17))/4.
inline const double kOptimalExpansionFactor = (3.0 + std::sqrt(17.0)) / 4.0;

/// Increasing turning distances for a zigzag searcher: either geometric
/// x_k = a^(k-1) with a > 1, or an explicit strictly increasing list.
class ZigzagSchedule {
 public:
  static ZigzagSchedule geometric(double expansion_factor);
  static ZigzagSchedule explicit_list(std::vector<double> distances);

  bool is_geometric() const { return explicit_.empty(); }
  double expansion_factor() const { return expansion_factor_; }

  /// Turning distance of round k (1-based). Throws SimulationError
  /// (nontermination) past the end of an explicit list.
  double turn_distance(int k) const;

  /// Rounds available (INT_MAX for geometric schedules).
  int known_rounds() const;

 private:
  ZigzagSchedule() = default;
  double expansion_factor_ = 0.0;
  std::vector<double> explicit_;
};

enum class Algorithm {
  kOffline,
  kOneAxis,
  kVisibleWait,
  kDiscoverable,
  kInvisibleZigzag,
  kGenericZigzag,
};

/// CLI/config ids: "offline", "one-axis", "visible-wait", "discoverable",
/// "invisible-zigzag", "generic-zigzag".
std::optional<Algorithm> algorithm_from_id(const std::string& id);
const char* algorithm_id(Algorithm alg);

struct StrategyParams {
  double expansion_factor = kOptimalExpansionFactor;    // invisible-zigzag
  std::optional<ZigzagSchedule> schedule;               // generic-zigzag
};

/// Whether the algorithm may run under the instance's knowledge configuration.
bool algorithm_applicable(Algorithm alg, const KnowledgeConfig& knowledge);

StrategyPair make_one_axis_pair();
StrategyPair make_visible_wait_pair();
StrategyPair make_discoverable_pair();
StrategyPair make_invisible_zigzag_pair(double expansion_factor);
/// Robot 0 runs the searcher, robot 1 idles forever.
StrategyPair make_generic_zigzag_pair(const ZigzagSchedule& schedule);
/// Scripted execution of the precomputed optimal plan (full knowledge).
StrategyPair make_offline_pair(const Instance& inst);

/// Dispatch by algorithm id; throws std::invalid_argument when the algorithm
/// cannot run under the instance's knowledge configuration.
StrategyPair make_strategy_pair(Algorithm alg, const Instance& inst,
                                const StrategyParams& params = {});

/// Raised by closed_form_time when no analyzed case covers the instance; the
/// caller falls back to the simulator.
class UncoveredCaseError : public std::runtime_error {
 public:
  explicit UncoveredCaseError(const std::string& what) : std::runtime_error(what) {}
};

/// Analytic delivery time of the named algorithm on the instance. Must match
/// the simulator within 1e-9 relative on covered instances.
double closed_form_time(const Instance& inst, Algorithm alg, const StrategyParams& params = {});

}  // namespace bombsquad

#endif  // BOMBSQUAD_STRATEGIES_HPP_
