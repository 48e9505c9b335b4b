#include "doctest.h"

#include <algorithm>

#include "bombsquad/engine.hpp"
#include "bombsquad/outcome.hpp"
#include "bombsquad/strategies.hpp"
#include "support/test_support.hpp"

using namespace bombsquad;

namespace {

int count_events(const DeliveryOutcome& outcome, EventKind kind) {
  return static_cast<int>(std::count_if(outcome.events.begin(), outcome.events.end(),
                                        [kind](const Event& e) { return e.kind == kind; }));
}

const Event* find_event(const DeliveryOutcome& outcome, EventKind kind) {
  for (const Event& e : outcome.events) {
    if (e.kind == kind) return &e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("collocation_time closed forms") {
  SUBCASE("head-on 1-D closure") {
    const auto t = collocation_time({0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {-1.0, 0.0}, 0.0);
    REQUIRE(t.has_value());
    CHECK(*t == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("parallel equal velocities never meet") {
    CHECK(!collocation_time({0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, 0.0).has_value());
  }
  SUBCASE("perpendicular interception at (1,0)") {
    const auto t = collocation_time({0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, -1.0}, 0.0);
    REQUIRE(t.has_value());
    CHECK(*t == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("already together fires immediately") {
    const auto t = collocation_time({0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}, 3.5);
    REQUIRE(t.has_value());
    CHECK(*t == 3.5);
  }
  SUBCASE("near miss below tolerance counts as contact") {
    const auto t = collocation_time({0.0, 5e-10}, {1.0, 0.0}, {2.0, 0.0}, {-1.0, 0.0}, 0.0);
    CHECK(t.has_value());
  }
}

TEST_CASE("scripted offline handoff produces the documented trace") {
  Instance inst;
  inst.critical_distance = 1.0;
  inst.robots[0] = {{0.0, 0.0}, 1.0 / 3.0};
  inst.robots[1] = {{2.0, 0.0}, 1.0};
  inst.knowledge = {AxisModel::kNoAxis, BoundaryModel::kVisible};

  StrategyPair pair = make_offline_pair(inst);
  const DeliveryOutcome outcome = simulate(inst, pair);

  CHECK(testing::rel_err(outcome.delivery_time, 2.0) < 1e-12);
  CHECK(count_events(outcome, EventKind::kCollocate) == 1);

  const Event* collocate = find_event(outcome, EventKind::kCollocate);
  REQUIRE(collocate != nullptr);
  CHECK(collocate->time == doctest::Approx(1.5).epsilon(1e-9));

  const Event* delivery = find_event(outcome, EventKind::kDelivery);
  REQUIRE(delivery != nullptr);
  CHECK(delivery->position.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(delivery->position.y == doctest::Approx(0.0));

  std::string why;
  CHECK_MESSAGE(testing::outcome_invariants_hold(inst, outcome, &why), why);
}

TEST_CASE("visible wait with a hopeless partner delivers at 2D") {
  Instance inst;
  inst.critical_distance = 1.0;
  inst.robots[0] = {{0.0, 0.0}, 1.0};
  inst.robots[1] = {{0.0, 1e6}, 1e-9};
  inst.knowledge = {AxisModel::kNoAxis, BoundaryModel::kVisible};

  StrategyPair pair = make_visible_wait_pair();
  const DeliveryOutcome outcome = simulate(inst, pair);
  CHECK(testing::rel_err(outcome.delivery_time, 2.0) < 1e-12);
}

TEST_CASE("both robots at the origin collocate at t=0 and the faster delivers") {
  Instance inst;
  inst.critical_distance = 1.0;
  inst.robots[0] = {{0.0, 0.0}, 0.5};
  inst.robots[1] = {{0.0, 0.0}, 2.0};
  inst.knowledge = {AxisModel::kNoAxis, BoundaryModel::kVisible};

  StrategyPair pair = make_visible_wait_pair();
  const DeliveryOutcome outcome = simulate(inst, pair);

  const Event* collocate = find_event(outcome, EventKind::kCollocate);
  REQUIRE(collocate != nullptr);
  CHECK(collocate->time == 0.0);
  CHECK(testing::rel_err(outcome.delivery_time, 0.5) < 1e-12);

  const Event* pickup = find_event(outcome, EventKind::kBombPickup);
  REQUIRE(pickup != nullptr);
  CHECK(pickup->robot == 1);
}

TEST_CASE("event logs are bit-identical across reruns") {
  Instance inst;
  inst.critical_distance = 2.0;
  inst.robots[0] = {{0.0, 1.5}, 0.3};
  inst.robots[1] = {{-3.0, 3.0}, 1.0};
  inst.knowledge = {AxisModel::kNoAxis, BoundaryModel::kInvisible};

  StrategyPair first = make_invisible_zigzag_pair(kOptimalExpansionFactor);
  StrategyPair second = make_invisible_zigzag_pair(kOptimalExpansionFactor);
  const std::string log1 = events_to_jsonl(simulate(inst, first));
  const std::string log2 = events_to_jsonl(simulate(inst, second));
  CHECK(log1 == log2);
  CHECK(!log1.empty());
}

TEST_CASE("event times are non-decreasing and custody is exclusive") {
  Instance inst;
  inst.critical_distance = 1.5;
  inst.robots[0] = {{0.0, 0.5}, 0.4};
  inst.robots[1] = {{-1.0, 1.0}, 1.0};
  inst.knowledge = {AxisModel::kNoAxis, BoundaryModel::kDiscoverable};

  StrategyPair pair = make_discoverable_pair();
  const DeliveryOutcome outcome = simulate(inst, pair);
  for (size_t i = 1; i < outcome.events.size(); ++i) {
    CHECK(outcome.events[i].time >= outcome.events[i - 1].time);
  }
  std::string why;
  CHECK_MESSAGE(testing::outcome_invariants_hold(inst, outcome, &why), why);
}

TEST_CASE("invisible model never reveals the boundary") {
  // A strategy that tries to read D under the invisible model must fault.
  class Cheater final : public RobotStrategy {
   public:
    Directive on_event(const RobotView& v, WakeReason) override {
      (void)v.critical_distance();
      return Directive::wait_forever();
    }
  };

  Instance inst;
  inst.critical_distance = 1.0;
  inst.robots[0] = {{0.0, 0.0}, 1.0};
  inst.robots[1] = {{0.0, 2.0}, 1.0};
  inst.knowledge = {AxisModel::kNoAxis, BoundaryModel::kInvisible};

  StrategyPair pair;
  pair.robots[0] = std::make_unique<Cheater>();
  pair.robots[1] = std::make_unique<Cheater>();
  CHECK_THROWS_AS((void)simulate(inst, pair), SimulationError);
  try {
    StrategyPair again;
    again.robots[0] = std::make_unique<Cheater>();
    again.robots[1] = std::make_unique<Cheater>();
    (void)simulate(inst, again);
  } catch (const SimulationError& err) {
    CHECK(err.kind() == SimulationError::Kind::kModelViolation);
  }
}

TEST_CASE("boundary discovery happens exactly at the crossing") {
  Instance inst;
  inst.critical_distance = 1.0;
  inst.robots[0] = {{0.0, 2.0}, 1.0};
  inst.robots[1] = {{0.0, 30.0}, 1e-6};
  inst.knowledge = {AxisModel::kNoAxis, BoundaryModel::kDiscoverable};

  StrategyPair pair = make_discoverable_pair();
  const DeliveryOutcome outcome = simulate(inst, pair);
  const Event* discovery = find_event(outcome, EventKind::kBoundaryDiscovery);
  REQUIRE(discovery != nullptr);
  CHECK(discovery->robot == 0);
  CHECK(discovery->time == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(discovery->position.norm() == doctest::Approx(1.0).epsilon(1e-12));
  // Arrive at 2, wait D/v until 3, deliver at 4.
  CHECK(testing::rel_err(outcome.delivery_time, 4.0) < 1e-12);
}

TEST_CASE("a zigzag schedule bounded below D is reported as nontermination") {
  Instance inst;
  inst.critical_distance = 10.0;
  inst.robots[0] = {{0.0, 0.0}, 1.0};
  inst.robots[1] = {{0.0, 1e9}, 1e-12};
  inst.knowledge = {AxisModel::kNoAxis, BoundaryModel::kVisible};

  StrategyPair pair = make_generic_zigzag_pair(ZigzagSchedule::explicit_list({1.0, 2.0, 3.0}));
  CHECK_THROWS_AS((void)simulate(inst, pair), SimulationError);
}
