#ifndef BOMBSQUAD_ANALYSIS_HPP_
#define BOMBSQUAD_ANALYSIS_HPP_

#include <functional>
#include <vector>

#include "bombsquad/strategies.hpp"

namespace bombsquad {

/// Simulated delivery time divided by the offline optimum.
double competitive_ratio(const Instance& inst, Algorithm alg, const StrategyParams& params = {});

/// Standard placement for parametrically built instances: robot 0 (speed
/// v_slow) on the +y axis, robot 1 (speed v_fast) on the 135-degree ray. The
/// two approach paths and the +x carry ray then meet only at the source.
Instance make_two_ray_instance(double d1, double v_slow, double d2, double v_fast, double D,
                               KnowledgeConfig knowledge);

struct SearchPoint {
  double d1 = 0.0;
  double d2 = 0.0;
  double v_slow = 1.0;
  double D = 1.0;
};

struct SearchDomain {
  double d1_lo = 0.0, d1_hi = 5.0;
  double d2_lo = 0.0, d2_hi = 5.0;
  double v_lo = 0.05, v_hi = 1.0;
  double D_lo = 1.0, D_hi = 1.0;  // D axis searched only when D_lo < D_hi
  int grid = 25;                  // level-0 points per axis
  int levels = 4;                 // refinement levels after level 0
};

struct SearchResult {
  Instance best_instance;
  SearchPoint best_point;
  double best_ratio = 0.0;
  long long evaluations = 0;

  struct TraceRow {
    int level;
    SearchPoint point;
    double ratio;
  };
  std::vector<TraceRow> trace;
};

/// Multiresolution adversarial maximization of the competitive ratio:
/// a uniform level-0 grid (with d1 = 0 kept as an exact hyperplane), then
/// refinement levels on a 0.2x box around the incumbent with a finer grid.
/// Deterministic given domain and budget; argmax ties resolve to the
/// lexicographically smallest (d1, d2, v_slow, D).
SearchResult adversarial_search(Algorithm alg, const SearchDomain& domain, long long budget,
                                const StrategyParams& params = {}, int jobs = 1);

SearchDomain default_search_domain(Algorithm alg, double d_max = 5.0, double D_max = 1.0);

// --- bound curves and optimizers -------------------------------------------

/// Cooperative lower-bound curve for the common-axis model,
/// (x + 1/sqrt(1 + 1/(1+x)^2)) / ((x^2+x+2)/(x+2)).
double oneaxis_lower_curve(double x);

/// No-cooperation companion curve (1+x) / ((x^2+x+2)/(x+2)); its maximum over
/// x >= 0 is (5+4*sqrt(2))/7 at x = sqrt(2).
double oneaxis_nocoop_curve(double x);

struct FamilyPoint {
  Instance instance;
  double ratio = 0.0;
};

/// Hard-instance family for the visible-boundary model against a strategy
/// that waits time t at the source. For t > 1/sqrt(2) the ratio is exactly
/// 1 + sqrt(2); for smaller t a fast far robot forces (t+1)/(t+epsilon).
FamilyPoint visible_lower_family(double t, double epsilon);

/// Hard-instance family for the discoverable-boundary model; the simulated
/// ratio is 3 + (9-18e)/(12-10e+4e^2), approaching 15/4.
FamilyPoint discoverable_lower_family(double epsilon);

struct ZigzagCr {
  double value = 0.0;
  bool diverges = false;
};

/// 3 + 2 * max_{1<=k<=k_max} (sum_{i<k} x_i) / x_k, with a tail-growth check
/// that flags divergence for non-geometric schedules.
ZigzagCr zigzag_cr(const ZigzagSchedule& schedule, int k_max);

struct ExpansionOptimum {
  double expansion_factor = 0.0;
  double ratio = 0.0;
};

/// Minimizes max(2a/(a-1) + 1, 2a + 2) by ternary search on [a_lo, a_hi];
/// the optimum is a = (3+sqrt(17))/4 with value (7+sqrt(17))/2.
ExpansionOptimum optimize_expansion_factor(double a_lo, double a_hi, double tol);

struct AlphaOptimum {
  double alpha = 0.0;
  double ratio = 0.0;
};

/// Maximizes the invisible-model lower bound max(3+2a, 1+2/a) at its crossing
/// point: alpha = (sqrt(5)-1)/2, value 2+sqrt(5). The grid seeds the bracket.
AlphaOptimum invisible_lower_bound(const std::vector<double>& alpha_grid);

// --- generic 1-D helpers ----------------------------------------------------

double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tol);
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol);

}  // namespace bombsquad

#endif  // BOMBSQUAD_ANALYSIS_HPP_
