#include <algorithm>
#include <cmath>

#include "bombsquad/strategies.hpp"

namespace bombsquad {

namespace {

struct Arrivals {
  double d0, v0, d1, v1;  // ordered slow/fast
};

// Faster speed of the pair; the tie-break (lower index slower) never changes
// the value, only which robot acts.
double faster_speed(const Instance& inst) {
  return std::max(inst.robots[0].speed, inst.robots[1].speed);
}

double cf_one_axis(const Instance& inst) {
  const double D = inst.critical_distance;
  const RobotSpec& slow = inst.slow();
  const RobotSpec& fast = inst.fast();
  const double d_s = slow.start_distance(), v_s = slow.speed;
  const double d_f = fast.start_distance(), v_f = fast.speed;
  const double arr_s = d_s / v_s;
  const double arr_f = d_f / v_f;

  if (arr_f <= arr_s) {
    return arr_f + D / v_f;  // fast robot reaches S first and finishes alone
  }

  // The analyzed cases assume the fast robot's approach never crosses the
  // outbound carrier; a fast robot on the open +x ray can meet it head-on.
  if (fast.start.y == 0.0 && fast.start.x > 0.0) {
    const double t_meet = (d_s + d_f) / (v_s + v_f);
    if (t_meet < arr_s + D / v_s) {
      throw UncoveredCaseError("one-axis: fast robot meets the carrier before reaching S");
    }
  }

  if (v_f == v_s) {
    return arr_s + D / v_s;  // no overtake possible
  }
  const double t_catch = (d_f - d_s) / (v_f - v_s);
  const double x_catch = v_s * (t_catch - arr_s);
  if (x_catch >= D) {
    return arr_s + D / v_s;  // carrier reaches the boundary uncaught
  }
  return t_catch + (D - x_catch) / v_f;
}

double cf_visible_wait(const Instance& inst) {
  const double D = inst.critical_distance;
  const double arr0 = inst.robots[0].start_distance() / inst.robots[0].speed;
  const double arr1 = inst.robots[1].start_distance() / inst.robots[1].speed;
  const int first = arr1 < arr0 ? 1 : 0;
  const double arr_first = first == 0 ? arr0 : arr1;
  const double arr_late = first == 0 ? arr1 : arr0;
  const double v_first = inst.robots[static_cast<size_t>(first)].speed;

  const double window_end = arr_first + D / v_first;
  if (arr_late <= window_end) {
    return arr_late + D / faster_speed(inst);
  }
  return window_end + D / v_first;
}

double cf_discoverable(const Instance& inst) {
  const double D = inst.critical_distance;
  // Robots act independently: an outside starter is ready to take the bomb
  // (d + D)/v after start (approach + wait), an inside starter (d + 2D)/v
  // (approach + out-and-back). Outside readiness ends with a timer, inside
  // with an arrival; arrivals win simultaneity, then the lower index.
  struct Ready {
    double time;
    int klass;  // 0 = arrival (inside starter), 1 = timer (outside starter)
    int index;
  };
  Ready ready[2];
  for (int i = 0; i < 2; ++i) {
    const RobotSpec& r = inst.robots[static_cast<size_t>(i)];
    const double d = r.start_distance();
    const bool outside = d >= D - scaled_tolerance(D);
    ready[i] = {outside ? (d + D) / r.speed : (d + 2.0 * D) / r.speed, outside ? 1 : 0, i};
  }
  const Ready& taker =
      (ready[1].time < ready[0].time ||
       (ready[1].time == ready[0].time && ready[1].klass < ready[0].klass))
          ? ready[1]
          : ready[0];
  return taker.time + D / inst.robots[static_cast<size_t>(taker.index)].speed;
}

double cf_invisible_zigzag(const Instance& inst, double a) {
  const double D = inst.critical_distance;
  for (const RobotSpec& r : inst.robots) {
    if (r.start.y == 0.0 && r.start.x > 0.0) {
      throw UncoveredCaseError("invisible-zigzag: start on the zigzag ray is not analyzed");
    }
  }

  const double arr0 = inst.robots[0].start_distance() / inst.robots[0].speed;
  const double arr1 = inst.robots[1].start_distance() / inst.robots[1].speed;
  const int first = arr1 < arr0 ? 1 : 0;
  const double arr_first = first == 0 ? arr0 : arr1;
  const double arr_late = first == 0 ? arr1 : arr0;
  const double v_first = inst.robots[static_cast<size_t>(first)].speed;
  const double v_fast = faster_speed(inst);

  const double window_end = arr_first + 2.0 / v_first;
  if (arr_late <= window_end) {
    return arr_late + D / v_fast;
  }

  // Solo delivery time: rounds 1..k+1 complete with set-downs at a^0..a^k
  // before the carry that crosses D.
  double t_solo = window_end;
  if (D <= 1.0) {
    t_solo += D / v_first;
  } else {
    double sum = 0.0;
    double power = 1.0;  // a^0
    while (power < D) {
      sum += power;
      power *= a;
    }
    t_solo += (2.0 * sum + D) / v_first;
  }

  // First return to S at or after the late robot's arrival.
  double prefix = 0.0;
  double power = 1.0;
  for (int m = 1; m <= 10000; ++m) {
    prefix += power;  // sum of a^0..a^(m-1)
    power *= a;
    const double return_time = window_end + 2.0 * prefix / v_first;
    if (t_solo <= return_time) {
      return t_solo;
    }
    if (return_time >= arr_late) {
      return return_time + D / v_fast;
    }
  }
  throw UncoveredCaseError("invisible-zigzag: round bound exceeded");
}

double cf_generic_zigzag(const Instance& inst, const ZigzagSchedule& schedule) {
  const double D = inst.critical_distance;
  const RobotSpec& searcher = inst.robots[0];
  double travel = D;
  for (int k = 1;; ++k) {
    if (k > schedule.known_rounds()) {
      throw UncoveredCaseError("generic-zigzag: schedule bounded below the critical distance");
    }
    const double x = schedule.turn_distance(k);
    if (x >= D) {
      break;
    }
    travel += 2.0 * x;
  }
  return searcher.start_distance() / searcher.speed + travel / searcher.speed;
}

}  // namespace

double closed_form_time(const Instance& inst, Algorithm alg, const StrategyParams& params) {
  validate_instance(inst);
  if (!algorithm_applicable(alg, inst.knowledge)) {
    throw std::invalid_argument(std::string(algorithm_id(alg)) +
                                ": not applicable under this knowledge configuration");
  }
  switch (alg) {
    case Algorithm::kOffline:
      return offline_optimal_time(inst);
    case Algorithm::kOneAxis:
      return cf_one_axis(inst);
    case Algorithm::kVisibleWait:
      return cf_visible_wait(inst);
    case Algorithm::kDiscoverable:
      return cf_discoverable(inst);
    case Algorithm::kInvisibleZigzag:
      return cf_invisible_zigzag(inst, params.expansion_factor);
    case Algorithm::kGenericZigzag:
      return cf_generic_zigzag(
          inst, params.schedule.value_or(ZigzagSchedule::geometric(params.expansion_factor)));
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace bombsquad
