#include "bombsquad/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace bombsquad {

double competitive_ratio(const Instance& inst, Algorithm alg, const StrategyParams& params) {
  StrategyPair pair = make_strategy_pair(alg, inst, params);
  const DeliveryOutcome outcome = simulate(inst, pair);
  return outcome.delivery_time / offline_optimal_time(inst);
}

Instance make_two_ray_instance(double d1, double v_slow, double d2, double v_fast, double D,
                               KnowledgeConfig knowledge) {
  Instance inst;
  inst.critical_distance = D;
  inst.knowledge = knowledge;
  inst.robots[0] = RobotSpec{{0.0, d1}, v_slow};
  const double diag = std::numbers::sqrt2 / 2.0;
  inst.robots[1] = RobotSpec{{-d2 * diag, d2 * diag}, v_fast};
  return inst;
}

namespace {

KnowledgeConfig search_knowledge(Algorithm alg) {
  switch (alg) {
    case Algorithm::kOneAxis:
      return {AxisModel::kOneAxis, BoundaryModel::kVisible};
    case Algorithm::kVisibleWait:
      return {AxisModel::kNoAxis, BoundaryModel::kVisible};
    case Algorithm::kDiscoverable:
      return {AxisModel::kNoAxis, BoundaryModel::kDiscoverable};
    case Algorithm::kInvisibleZigzag:
      return {AxisModel::kNoAxis, BoundaryModel::kInvisible};
    default:
      return {AxisModel::kNoAxis, BoundaryModel::kVisible};
  }
}

std::vector<double> axis_points(double lo, double hi, int n, bool pin_zero) {
  std::vector<double> points;
  if (hi <= lo) {
    points.push_back(lo);
  } else {
    points.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
      points.push_back(lo + (hi - lo) * i / (n - 1));
    }
  }
  if (pin_zero && lo <= 0.0 && 0.0 <= hi &&
      std::none_of(points.begin(), points.end(), [](double v) { return v == 0.0; })) {
    points.push_back(0.0);
    std::sort(points.begin(), points.end());
  }
  return points;
}

struct Incumbent {
  double ratio = -1.0;
  SearchPoint point;

  bool beats(const Incumbent& other) const {
    if (ratio != other.ratio) return ratio > other.ratio;
    const auto key = [](const SearchPoint& p) {
      return std::array<double, 4>{p.d1, p.d2, p.v_slow, p.D};
    };
    return key(point) < key(other.point);
  }
};

}  // namespace

SearchDomain default_search_domain(Algorithm alg, double d_max, double D_max) {
  SearchDomain domain;
  domain.d1_hi = d_max;
  domain.d2_hi = d_max;
  if (alg == Algorithm::kInvisibleZigzag) {
    domain.D_lo = 1.0;
    domain.D_hi = std::max(1.0, D_max);
  }
  return domain;
}

SearchResult adversarial_search(Algorithm alg, const SearchDomain& domain, long long budget,
                                const StrategyParams& params, int jobs) {
  if (domain.grid < 2 || domain.levels < 0) {
    throw std::invalid_argument("adversarial_search: grid must be >= 2 and levels >= 0");
  }
  const KnowledgeConfig knowledge = search_knowledge(alg);
  const bool d_axis = domain.D_lo < domain.D_hi;
  if (knowledge.boundary == BoundaryModel::kInvisible && domain.D_lo < 1.0) {
    throw std::invalid_argument("adversarial_search: invisible model requires D >= 1");
  }
  const int axes = d_axis ? 4 : 3;
  if (jobs <= 0) {
    jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }

  struct Box {
    double d1_lo, d1_hi, d2_lo, d2_hi, v_lo, v_hi, D_lo, D_hi;
  };
  Box box{domain.d1_lo, domain.d1_hi, domain.d2_lo, domain.d2_hi,
          domain.v_lo,  domain.v_hi,  domain.D_lo,  domain.D_hi};

  SearchResult result;
  Incumbent incumbent;
  long long used = 0;

  auto evaluate_grid = [&](const Box& b, int n) {
    const std::vector<double> d1s = axis_points(b.d1_lo, b.d1_hi, n, true);
    const std::vector<double> d2s = axis_points(b.d2_lo, b.d2_hi, n, false);
    const std::vector<double> vs = axis_points(b.v_lo, b.v_hi, n, false);
    const std::vector<double> Ds =
        d_axis ? axis_points(b.D_lo, b.D_hi, n, false) : std::vector<double>{domain.D_lo};

    const long long total = static_cast<long long>(d1s.size()) * d2s.size() * vs.size() * Ds.size();
    auto point_at = [&](long long flat) {
      SearchPoint p;
      p.D = Ds[static_cast<size_t>(flat % Ds.size())];
      flat /= static_cast<long long>(Ds.size());
      p.v_slow = vs[static_cast<size_t>(flat % vs.size())];
      flat /= static_cast<long long>(vs.size());
      p.d2 = d2s[static_cast<size_t>(flat % d2s.size())];
      flat /= static_cast<long long>(d2s.size());
      p.d1 = d1s[static_cast<size_t>(flat)];
      return p;
    };

    const int workers = static_cast<int>(std::min<long long>(jobs, std::max<long long>(total, 1)));
    std::vector<Incumbent> bests(static_cast<size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        try {
          Incumbent local;
          for (long long flat = w; flat < total; flat += workers) {
            const SearchPoint p = point_at(flat);
            const Instance inst = make_two_ray_instance(p.d1, p.v_slow, p.d2, 1.0, p.D, knowledge);
            const double ratio = competitive_ratio(inst, alg, params);
            Incumbent candidate{ratio, p};
            if (candidate.beats(local)) {
              local = candidate;
            }
          }
          bests[static_cast<size_t>(w)] = local;
        } catch (...) {
          errors[static_cast<size_t>(w)] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) {
      t.join();
    }
    for (const std::exception_ptr& err : errors) {
      if (err) {
        std::rethrow_exception(err);
      }
    }
    Incumbent best;
    for (const Incumbent& b2 : bests) {
      if (b2.beats(best)) {
        best = b2;
      }
    }
    used += total;
    return best;
  };

  // Level 0: full-domain grid.
  {
    long long level0 = 1;
    for (int a = 0; a < axes; ++a) {
      level0 *= domain.grid + 1;  // +1 covers the pinned d1 = 0 slice
    }
    if (level0 > budget) {
      throw std::invalid_argument("adversarial_search: budget too small for one full grid");
    }
  }
  Incumbent level_best = evaluate_grid(box, domain.grid);
  if (level_best.beats(incumbent)) {
    incumbent = level_best;
  }
  result.trace.push_back({0, incumbent.point, incumbent.ratio});

  for (int level = 1; level <= domain.levels; ++level) {
    const int remaining_levels = domain.levels - level + 1;
    const long long per_level = (budget - used) / remaining_levels;
    int n = static_cast<int>(std::floor(std::pow(static_cast<double>(std::max<long long>(per_level, 0)),
                                                 1.0 / axes)));
    n = std::min(n, 49);
    if (n % 2 == 0) {
      --n;
    }
    if (n < 3) {
      break;  // budget exhausted; incumbent stands
    }
    auto shrink = [&](double lo, double hi, double center, double dom_lo, double dom_hi) {
      const double width = (hi - lo) * 0.2;
      double new_lo = center - width / 2.0;
      double new_hi = center + width / 2.0;
      new_lo = std::max(new_lo, dom_lo);
      new_hi = std::min(new_hi, dom_hi);
      return std::pair<double, double>{new_lo, new_hi};
    };
    const auto [d1_lo, d1_hi] = shrink(box.d1_lo, box.d1_hi, incumbent.point.d1, domain.d1_lo, domain.d1_hi);
    const auto [d2_lo, d2_hi] = shrink(box.d2_lo, box.d2_hi, incumbent.point.d2, domain.d2_lo, domain.d2_hi);
    const auto [v_lo, v_hi] = shrink(box.v_lo, box.v_hi, incumbent.point.v_slow, domain.v_lo, domain.v_hi);
    const auto [D_lo, D_hi] =
        d_axis ? shrink(box.D_lo, box.D_hi, incumbent.point.D, domain.D_lo, domain.D_hi)
               : std::pair<double, double>{box.D_lo, box.D_hi};
    box = Box{d1_lo, d1_hi, d2_lo, d2_hi, v_lo, v_hi, D_lo, D_hi};

    level_best = evaluate_grid(box, n);
    if (level_best.beats(incumbent)) {
      incumbent = level_best;
    }
    result.trace.push_back({level, incumbent.point, incumbent.ratio});
  }

  result.best_point = incumbent.point;
  result.best_instance = make_two_ray_instance(incumbent.point.d1, incumbent.point.v_slow,
                                               incumbent.point.d2, 1.0, incumbent.point.D,
                                               knowledge);
  result.best_ratio = competitive_ratio(result.best_instance, alg, params);
  result.evaluations = used;
  return result;
}

// --- curves and optimizers ---------------------------------------------------

double oneaxis_lower_curve(double x) {
  if (x < 0.0) {
    throw std::invalid_argument("oneaxis_lower_curve: x must be >= 0");
  }
  const double opt = (x * x + x + 2.0) / (x + 2.0);
  const double inv = 1.0 / ((1.0 + x) * (1.0 + x));
  return (x + 1.0 / std::sqrt(1.0 + inv)) / opt;
}

double oneaxis_nocoop_curve(double x) {
  if (x < 0.0) {
    throw std::invalid_argument("oneaxis_nocoop_curve: x must be >= 0");
  }
  return (1.0 + x) / ((x * x + x + 2.0) / (x + 2.0));
}

FamilyPoint visible_lower_family(double t, double epsilon) {
  if (!(t > 0.0)) {
    throw std::invalid_argument("visible_lower_family: t must be > 0");
  }
  const KnowledgeConfig knowledge{AxisModel::kNoAxis, BoundaryModel::kVisible};
  const double sqrt2 = std::numbers::sqrt2;

  if (t > 1.0 / sqrt2) {
    // Closed-form branch: the second robot arrives just after the waiting
    // window and could have delivered almost as fast as the optimum.
    const double v = ((2.0 + sqrt2) * t - sqrt2) / (2.0 * sqrt2 * t - 2.0);
    const double d = (-t * v * v - t * v - v * v + sqrt2 * v + sqrt2 + 1.0) /
                     (-sqrt2 * v - v + sqrt2 + 1.0);
    const double meet = d / (1.0 + v);
    const double opt = meet + (1.0 - meet) / v;
    FamilyPoint point;
    point.instance = make_two_ray_instance(0.0, 1.0, d, v, 1.0, knowledge);
    point.ratio = (t + 1.0) / opt;
    return point;
  }

  if (!(epsilon > 0.0)) {
    throw std::invalid_argument(
        "visible_lower_family: t <= 1/sqrt(2) needs the epsilon branch (epsilon > 0)");
  }
  const double v = 2.0 / epsilon;
  const double d = 1.0 + 2.0 * t / epsilon;
  FamilyPoint point;
  point.instance = make_two_ray_instance(0.0, 1.0, d, v, 1.0, knowledge);
  point.ratio = (t + 1.0) / (t + epsilon);
  return point;
}

FamilyPoint discoverable_lower_family(double epsilon) {
  if (!(epsilon > 0.0) || epsilon >= 0.1) {
    throw std::invalid_argument("discoverable_lower_family: epsilon must be in (0, 0.1)");
  }
  const double v1 = 2.0 / (3.0 - 2.0 * epsilon);
  FamilyPoint point;
  point.instance = make_two_ray_instance(0.0, v1, 1.0 - epsilon, 1.0, 1.0,
                                         {AxisModel::kNoAxis, BoundaryModel::kDiscoverable});
  point.ratio = competitive_ratio(point.instance, Algorithm::kDiscoverable);
  return point;
}

ZigzagCr zigzag_cr(const ZigzagSchedule& schedule, int k_max) {
  if (k_max < 2) {
    throw std::invalid_argument("zigzag_cr: k_max must be >= 2");
  }
  const int rounds = std::min(k_max, schedule.known_rounds());
  const int tail = std::max(rounds / 4, 1);
  double prefix = 0.0;
  double best = 0.0;
  double best_before_tail = 0.0;
  for (int k = 1; k <= rounds; ++k) {
    const double x = schedule.turn_distance(k);
    best = std::max(best, prefix / x);
    if (k == rounds - tail) {
      best_before_tail = best;
    }
    prefix += x;
  }
  ZigzagCr out;
  out.value = 3.0 + 2.0 * best;
  out.diverges = !schedule.is_geometric() && (best - best_before_tail) > 1e-9;
  return out;
}

ExpansionOptimum optimize_expansion_factor(double a_lo, double a_hi, double tol) {
  if (!(1.0 < a_lo && a_lo < a_hi)) {
    throw std::invalid_argument("optimize_expansion_factor: need 1 < a_lo < a_hi");
  }
  const auto g = [](double a) { return std::max(2.0 * a / (a - 1.0) + 1.0, 2.0 * a + 2.0); };
  // g is unimodal: the first branch decreases, the second increases.
  double lo = a_lo;
  double hi = a_hi;
  while (hi - lo > tol) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (g(m1) < g(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double a = (lo + hi) / 2.0;
  return {a, g(a)};
}

AlphaOptimum invisible_lower_bound(const std::vector<double>& alpha_grid) {
  if (alpha_grid.size() < 2) {
    throw std::invalid_argument("invisible_lower_bound: grid needs at least 2 points");
  }
  for (double a : alpha_grid) {
    if (!(0.0 < a && a < 1.0)) {
      throw std::invalid_argument("invisible_lower_bound: grid must lie in (0, 1)");
    }
  }
  const auto h = [](double a) { return std::max(3.0 + 2.0 * a, 1.0 + 2.0 / a); };
  size_t arg = 0;
  for (size_t i = 1; i < alpha_grid.size(); ++i) {
    if (h(alpha_grid[i]) < h(alpha_grid[arg])) {
      arg = i;
    }
  }
  const double lo = alpha_grid[arg > 0 ? arg - 1 : 0];
  const double hi = alpha_grid[std::min(arg + 1, alpha_grid.size() - 1)];
  const double alpha = golden_section_minimize(h, lo, hi, 1e-12);
  return {alpha, h(alpha)};
}

double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tol) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2.0;
}

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol) {
  return golden_section_minimize([&f](double x) { return -f(x); }, lo, hi, tol);
}

}  // namespace bombsquad
