#include "doctest.h"

#include <cmath>

#include "bombsquad/analysis.hpp"
#include "bombsquad/strategies.hpp"
#include "support/test_support.hpp"

using namespace bombsquad;
using bombsquad::testing::Rng;

namespace {

double simulated_time(const Instance& inst, Algorithm alg, const StrategyParams& params = {}) {
  StrategyPair pair = make_strategy_pair(alg, inst, params);
  return simulate(inst, pair).delivery_time;
}

}  // namespace

TEST_CASE("common-axis strategy traces") {
  SUBCASE("worst-case geometry reaches (5+4sqrt2)/7") {
    const Instance inst = make_two_ray_instance(0.0, testing::kSqrt2 - 1.0, testing::kSqrt2, 1.0,
                                                1.0, {AxisModel::kOneAxis, BoundaryModel::kVisible});
    const double t = simulated_time(inst, Algorithm::kOneAxis);
    CHECK(testing::rel_err(t, 1.0 + testing::kSqrt2) < 1e-9);
    CHECK(testing::rel_err(competitive_ratio(inst, Algorithm::kOneAxis), testing::kOneAxisUpper) <
          1e-9);
  }
  SUBCASE("catch exactly at the boundary") {
    const Instance inst = make_two_ray_instance(0.0, 0.5, 1.0, 1.0, 1.0,
                                                {AxisModel::kOneAxis, BoundaryModel::kVisible});
    CHECK(testing::rel_err(simulated_time(inst, Algorithm::kOneAxis), 2.0) < 1e-9);
    CHECK(testing::rel_err(competitive_ratio(inst, Algorithm::kOneAxis), 1.5) < 1e-9);
  }
  SUBCASE("fast robot starting at the source is optimal") {
    const Instance inst = make_two_ray_instance(3.0, 0.5, 0.0, 1.0, 1.0,
                                                {AxisModel::kOneAxis, BoundaryModel::kVisible});
    CHECK(testing::rel_err(competitive_ratio(inst, Algorithm::kOneAxis), 1.0) < 1e-9);
  }
}

TEST_CASE("visible-boundary waiting strategy traces") {
  const KnowledgeConfig kc{AxisModel::kNoAxis, BoundaryModel::kVisible};
  SUBCASE("fast arrival inside the window delivers") {
    const Instance inst = make_two_ray_instance(0.0, 1.0, 1.0, 2.0, 1.0, kc);
    CHECK(testing::rel_err(simulated_time(inst, Algorithm::kVisibleWait), 1.0) < 1e-9);
    CHECK(testing::rel_err(competitive_ratio(inst, Algorithm::kVisibleWait), 1.5) < 1e-9);
  }
  SUBCASE("timeout forces the no-cooperation bound") {
    const Instance inst = make_two_ray_instance(0.0, 1.0, 10.0, 0.1, 1.0, kc);
    CHECK(testing::rel_err(simulated_time(inst, Algorithm::kVisibleWait), 2.0) < 1e-9);
    CHECK(testing::rel_err(competitive_ratio(inst, Algorithm::kVisibleWait), 2.0) < 1e-9);
  }
  SUBCASE("both at the source: immediate optimal delivery") {
    const Instance inst = make_two_ray_instance(0.0, 0.5, 0.0, 1.0, 1.0, kc);
    CHECK(testing::rel_err(competitive_ratio(inst, Algorithm::kVisibleWait), 1.0) < 1e-9);
  }
}

TEST_CASE("discoverable-boundary strategy traces") {
  const KnowledgeConfig kc{AxisModel::kNoAxis, BoundaryModel::kDiscoverable};
  SUBCASE("fast at the source explores out and back: ratio 3") {
    const Instance inst = make_two_ray_instance(5.0, 0.05, 0.0, 1.0, 1.0, kc);
    CHECK(testing::rel_err(simulated_time(inst, Algorithm::kDiscoverable), 3.0) < 1e-9);
    CHECK(testing::rel_err(competitive_ratio(inst, Algorithm::kDiscoverable), 3.0) < 1e-9);
  }
  SUBCASE("outside starter discovers on approach, waits, then delivers") {
    const Instance inst = make_two_ray_instance(2.0, 1.0, 30.0, 1e-6, 1.0, kc);
    CHECK(testing::rel_err(simulated_time(inst, Algorithm::kDiscoverable), 4.0) < 1e-9);
    CHECK(testing::rel_err(competitive_ratio(inst, Algorithm::kDiscoverable), 4.0 / 3.0) < 1e-9);
  }
  SUBCASE("15/4 family instance at epsilon = 1e-6") {
    const FamilyPoint fp = discoverable_lower_family(1e-6);
    CHECK(fp.ratio == doctest::Approx(3.7499996).epsilon(1e-6));
  }
}

TEST_CASE("invisible-boundary zigzag traces") {
  const KnowledgeConfig kc{AxisModel::kNoAxis, BoundaryModel::kInvisible};
  const double a = kOptimalExpansionFactor;
  SUBCASE("single effective robot, D = 1.5") {
    const Instance inst = make_two_ray_instance(0.0, 1.0, 1e9, 1e-12, 1.5, kc);
    const double t = simulated_time(inst, Algorithm::kInvisibleZigzag);
    CHECK(testing::rel_err(t, 5.5) < 1e-9);
    CHECK(testing::rel_err(competitive_ratio(inst, Algorithm::kInvisibleZigzag), 5.5 / 1.5) < 1e-9);
  }
  SUBCASE("fast robot waits at S and fetches after round one") {
    const Instance inst = make_two_ray_instance(0.0, 1.0, 25.0, 10.0, 2.0, kc);
    const double t = simulated_time(inst, Algorithm::kInvisibleZigzag);
    CHECK(testing::rel_err(t, 4.2) < 1e-9);
    CHECK(testing::rel_err(competitive_ratio(inst, Algorithm::kInvisibleZigzag), 2.1) < 1e-9);
  }
  SUBCASE("both at the source: the faster delivers directly") {
    const Instance inst = make_two_ray_instance(0.0, 0.25, 0.0, 1.0, 2.0, kc);
    CHECK(testing::rel_err(simulated_time(inst, Algorithm::kInvisibleZigzag), 2.0) < 1e-9);
    CHECK(testing::rel_err(competitive_ratio(inst, Algorithm::kInvisibleZigzag), 1.0) < 1e-9);
  }
  (void)a;
}

TEST_CASE("generic zigzag searcher") {
  const KnowledgeConfig kc{AxisModel::kNoAxis, BoundaryModel::kVisible};
  SUBCASE("doubling schedule just past 8") {
    Instance inst = make_two_ray_instance(0.0, 1.0, 1e9, 1e-12, 8.0 + 1e-9, kc);
    StrategyParams params;
    params.schedule = ZigzagSchedule::geometric(2.0);
    const double t = simulated_time(inst, Algorithm::kGenericZigzag, params);
    CHECK(testing::rel_err(t, 38.0) < 1e-8);
    const double ratio = competitive_ratio(inst, Algorithm::kGenericZigzag, params);
    CHECK(ratio == doctest::Approx(4.75).epsilon(1e-6));
    CHECK(ratio <= 5.0);
  }
  SUBCASE("boundary inside the first turn distance") {
    Instance inst = make_two_ray_instance(0.0, 1.0, 1e9, 1e-12, 0.5, kc);
    StrategyParams params;
    params.schedule = ZigzagSchedule::explicit_list({1.0, 2.0, 4.0});
    CHECK(testing::rel_err(simulated_time(inst, Algorithm::kGenericZigzag, params), 0.5) < 1e-12);
  }
}

TEST_CASE("closed forms match the documented spot values") {
  CHECK(testing::rel_err(
            closed_form_time(make_two_ray_instance(0.0, 1.0, 1.0, 2.0, 1.0,
                                                   {AxisModel::kNoAxis, BoundaryModel::kVisible}),
                             Algorithm::kVisibleWait),
            1.0) < 1e-12);
  CHECK(testing::rel_err(
            closed_form_time(
                make_two_ray_instance(0.0, testing::kSqrt2 - 1.0, testing::kSqrt2, 1.0, 1.0,
                                      {AxisModel::kOneAxis, BoundaryModel::kVisible}),
                Algorithm::kOneAxis),
            1.0 + testing::kSqrt2) < 1e-12);
  CHECK(testing::rel_err(
            closed_form_time(make_two_ray_instance(0.0, 1.0, 1e9, 1e-12, 1.5,
                                                   {AxisModel::kNoAxis, BoundaryModel::kInvisible}),
                             Algorithm::kInvisibleZigzag),
            5.5) < 1e-12);
}

TEST_CASE("uncovered one-axis geometry raises and simulates sensibly") {
  // Fast robot dead ahead on the +x carry ray meets the carrier head-on.
  Instance inst;
  inst.critical_distance = 1.0;
  inst.robots[0] = {{0.0, 0.0}, 0.5};
  inst.robots[1] = {{1.0, 0.0}, 1.0};
  inst.knowledge = {AxisModel::kOneAxis, BoundaryModel::kVisible};

  CHECK_THROWS_AS((void)closed_form_time(inst, Algorithm::kOneAxis), UncoveredCaseError);
  // The simulator still handles it: the fast robot takes the bomb at the
  // meeting point and carries it straight out, which happens to be optimal.
  CHECK(testing::rel_err(simulated_time(inst, Algorithm::kOneAxis),
                         offline_optimal_time(inst)) < 1e-9);
}

TEST_CASE("simulation equals closed form on random covered instances") {
  Rng rng(0x5eed0005);
  const int kTrials = 800;

  for (int i = 0; i < kTrials; ++i) {
    const Instance inst = testing::random_two_ray_instance(
        rng, {AxisModel::kOneAxis, BoundaryModel::kVisible});
    CHECK(testing::rel_err(simulated_time(inst, Algorithm::kOneAxis),
                           closed_form_time(inst, Algorithm::kOneAxis)) < 1e-9);
  }
  for (int i = 0; i < kTrials; ++i) {
    const Instance inst = testing::random_two_ray_instance(
        rng, {AxisModel::kNoAxis, BoundaryModel::kVisible});
    CHECK(testing::rel_err(simulated_time(inst, Algorithm::kVisibleWait),
                           closed_form_time(inst, Algorithm::kVisibleWait)) < 1e-9);
  }
  for (int i = 0; i < kTrials; ++i) {
    const Instance inst = testing::random_two_ray_instance(
        rng, {AxisModel::kNoAxis, BoundaryModel::kDiscoverable});
    CHECK(testing::rel_err(simulated_time(inst, Algorithm::kDiscoverable),
                           closed_form_time(inst, Algorithm::kDiscoverable)) < 1e-9);
  }
  for (int i = 0; i < kTrials; ++i) {
    const Instance inst = testing::random_two_ray_instance(
        rng, {AxisModel::kNoAxis, BoundaryModel::kInvisible}, 30.0, 0.05, 1.0, 30.0);
    StrategyParams params;
    params.expansion_factor = rng.uniform(1.3, 2.6);
    CHECK(testing::rel_err(simulated_time(inst, Algorithm::kInvisibleZigzag, params),
                           closed_form_time(inst, Algorithm::kInvisibleZigzag, params)) < 1e-9);
  }
}

TEST_CASE("invisible zigzag pairs only ever collocate at the source") {
  Rng rng(0x5eed0006);
  for (int i = 0; i < 300; ++i) {
    const Instance inst = testing::random_two_ray_instance(
        rng, {AxisModel::kNoAxis, BoundaryModel::kInvisible}, 20.0, 0.05, 1.0, 20.0);
    StrategyPair pair = make_invisible_zigzag_pair(kOptimalExpansionFactor);
    const DeliveryOutcome outcome = simulate(inst, pair);
    for (const Event& e : outcome.events) {
      if (e.kind == EventKind::kCollocate) {
        CHECK(e.position.norm() <= 2e-9);
      }
    }
  }
}

TEST_CASE("algorithm applicability is enforced") {
  const Instance inst = make_two_ray_instance(1.0, 0.5, 1.0, 1.0, 1.0,
                                              {AxisModel::kNoAxis, BoundaryModel::kInvisible});
  CHECK_THROWS_AS((void)make_strategy_pair(Algorithm::kVisibleWait, inst), std::invalid_argument);
  CHECK_THROWS_AS((void)make_strategy_pair(Algorithm::kOneAxis, inst), std::invalid_argument);
  CHECK(algorithm_applicable(Algorithm::kInvisibleZigzag, inst.knowledge));
  CHECK(algorithm_applicable(Algorithm::kOffline, inst.knowledge));
}

TEST_CASE("algorithm ids round-trip") {
  for (Algorithm alg : {Algorithm::kOffline, Algorithm::kOneAxis, Algorithm::kVisibleWait,
                        Algorithm::kDiscoverable, Algorithm::kInvisibleZigzag,
                        Algorithm::kGenericZigzag}) {
    const auto parsed = algorithm_from_id(algorithm_id(alg));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == alg);
  }
  CHECK(!algorithm_from_id("nope").has_value());
}
