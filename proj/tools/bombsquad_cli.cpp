// Command-line front end: run one instance under a chosen algorithm, sweep
// instance space adversarially, or recompute the headline bound table.
// Output is machine-first (JSON / CSV); identical invocations produce
// byte-identical stdout.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bombsquad/analysis.hpp"
#include "bombsquad/instance_io.hpp"
#include "bombsquad/outcome.hpp"
#include "bombsquad/strategies.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitModelViolation = 3;
constexpr int kExitNontermination = 4;

using bombsquad::Algorithm;
using nlohmann::ordered_json;

bombsquad::StrategyParams build_params(double a, const std::string& xs) {
  bombsquad::StrategyParams params;
  params.expansion_factor = a;
  if (!xs.empty()) {
    std::vector<double> list;
    std::stringstream stream(xs);
    std::string token;
    while (std::getline(stream, token, ',')) {
      list.push_back(std::stod(token));
    }
    params.schedule = bombsquad::ZigzagSchedule::explicit_list(list);
  }
  return params;
}

int cmd_run(const std::string& instance_path, const std::string& alg_id, double a,
            const std::string& xs, const std::string& events_path) {
  const auto alg = bombsquad::algorithm_from_id(alg_id);
  if (!alg.has_value()) {
    std::cerr << "error: unknown algorithm id '" << alg_id << "'\n";
    return kExitBadInput;
  }
  const bombsquad::Instance inst = bombsquad::load_instance_file(instance_path);
  const bombsquad::StrategyParams params = build_params(a, xs);

  bombsquad::StrategyPair pair = bombsquad::make_strategy_pair(*alg, inst, params);
  const bombsquad::DeliveryOutcome outcome = bombsquad::simulate(inst, pair);
  const double offline_time = bombsquad::offline_optimal_time(inst);

  if (!events_path.empty()) {
    std::ofstream out(events_path);
    if (!out) {
      std::cerr << "error: cannot open events path " << events_path << "\n";
      return kExitBadInput;
    }
    out << bombsquad::events_to_jsonl(outcome);
  }

  ordered_json report;
  report["instance"] = ordered_json::parse(bombsquad::instance_to_json(inst));
  report["algorithm"] = alg_id;
  report["delivery_time"] = outcome.delivery_time;
  report["offline_time"] = offline_time;
  report["ratio"] = outcome.delivery_time / offline_time;
  if (!events_path.empty()) {
    report["events_path"] = events_path;
  }
  std::cout << report.dump(2) << "\n";
  return kExitOk;
}

bombsquad::SearchDomain parse_domain_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  bombsquad::SearchDomain domain;
  auto range = [&doc](const char* key, double& lo, double& hi) {
    if (doc.contains(key)) {
      const auto& node = doc.at(key);
      if (!node.is_array() || node.size() != 2) {
        throw std::invalid_argument(std::string(key) + ": expected [lo, hi]");
      }
      lo = node[0].get<double>();
      hi = node[1].get<double>();
    }
  };
  range("d1", domain.d1_lo, domain.d1_hi);
  range("d2", domain.d2_lo, domain.d2_hi);
  range("v_slow", domain.v_lo, domain.v_hi);
  range("D", domain.D_lo, domain.D_hi);
  if (doc.contains("grid")) domain.grid = doc.at("grid").get<int>();
  if (doc.contains("levels")) domain.levels = doc.at("levels").get<int>();
  return domain;
}

int cmd_search(const std::string& alg_id, const std::string& domain_path, long long budget,
               int jobs, const std::string& out_path, double a, double d_max, double D_max) {
  const auto alg = bombsquad::algorithm_from_id(alg_id);
  if (!alg.has_value() || *alg == Algorithm::kOffline) {
    std::cerr << "error: cannot search algorithm '" << alg_id << "'\n";
    return kExitBadInput;
  }

  bombsquad::SearchDomain domain;
  if (!domain_path.empty()) {
    std::ifstream in(domain_path);
    if (!in) {
      std::cerr << "error: cannot open domain file " << domain_path << "\n";
      return kExitBadInput;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    domain = parse_domain_json(buffer.str());
  } else {
    double effective_d_max = d_max;
    if (*alg == Algorithm::kInvisibleZigzag && d_max <= 0.0) {
      effective_d_max = 1.2 * D_max;  // keep late-meeting worst cases reachable
    } else if (d_max <= 0.0) {
      effective_d_max = 5.0;
    }
    domain = bombsquad::default_search_domain(*alg, effective_d_max, D_max);
  }

  bombsquad::StrategyParams params;
  params.expansion_factor = a;
  const bombsquad::SearchResult result =
      bombsquad::adversarial_search(*alg, domain, budget, params, jobs);

  std::string csv = "level,d1,d2,v_slow,D,ratio\n";
  char line[256];
  for (const auto& row : result.trace) {
    std::snprintf(line, sizeof(line), "%d,%.12g,%.12g,%.12g,%.12g,%.12g\n", row.level,
                  row.point.d1, row.point.d2, row.point.v_slow, row.point.D, row.ratio);
    csv += line;
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open output path " << out_path << "\n";
      return kExitBadInput;
    }
    out << csv;
  }

  ordered_json summary;
  summary["algorithm"] = alg_id;
  summary["best"] = {{"d1", result.best_point.d1},
                     {"d2", result.best_point.d2},
                     {"v_slow", result.best_point.v_slow},
                     {"D", result.best_point.D}};
  summary["best_ratio"] = result.best_ratio;
  summary["evaluations"] = result.evaluations;
  summary["levels"] = result.trace.size();
  if (out_path.empty()) {
    summary["trace_csv"] = csv;
  }
  std::cout << summary.dump(2) << "\n";
  return kExitOk;
}

int cmd_bounds(const std::string& out_path) {
  using bombsquad::golden_section_maximize;

  struct Row {
    const char* axis;
    const char* boundary;
    const char* bound;
    double computed;
    double paper;
  };

  const double sqrt2 = std::sqrt(2.0);
  const double one_axis_upper =
      golden_section_maximize(bombsquad::oneaxis_nocoop_curve, 0.0, 10.0, 1e-12);
  const double one_axis_lower =
      golden_section_maximize(bombsquad::oneaxis_lower_curve, 0.0, 10.0, 1e-12);
  // Case bound of the waiting algorithm: 2d(1+d)/(1+d^2), maximal at d = 1+sqrt(2).
  const double visible_upper = golden_section_maximize(
      [](double d) { return 2.0 * d * (1.0 + d) / (1.0 + d * d); }, 0.0, 10.0, 1e-12);
  const double visible_lower = bombsquad::visible_lower_family(2.0, 1e-9).ratio;
  const double discoverable_upper = bombsquad::discoverable_lower_family(1e-6).ratio;

  // Lower-bound construction: one robot at the source explores out and back
  // while the other is too slow and far to matter.
  const bombsquad::Instance ratio3 = bombsquad::make_two_ray_instance(
      5.0, 0.05, 0.0, 1.0, 1.0, {bombsquad::AxisModel::kNoAxis, bombsquad::BoundaryModel::kDiscoverable});
  const double discoverable_lower = bombsquad::competitive_ratio(ratio3, Algorithm::kDiscoverable);

  const auto invisible_upper = bombsquad::optimize_expansion_factor(1.01, 10.0, 1e-9);
  std::vector<double> alpha_grid;
  for (int i = 1; i < 1000; ++i) alpha_grid.push_back(i / 1000.0);
  const auto invisible_lower = bombsquad::invisible_lower_bound(alpha_grid);

  const Row rows[] = {
      {"one-axis", "all", "upper", one_axis_upper, (5.0 + 4.0 * sqrt2) / 7.0},
      {"one-axis", "all", "lower", one_axis_lower, 1.48102},
      {"no-axis", "visible", "upper", visible_upper, 1.0 + sqrt2},
      {"no-axis", "visible", "lower", visible_lower, 1.0 + sqrt2},
      {"no-axis", "discoverable", "upper", discoverable_upper, 15.0 / 4.0},
      {"no-axis", "discoverable", "lower", discoverable_lower, 3.0},
      {"no-axis", "invisible", "upper", invisible_upper.ratio, (7.0 + std::sqrt(17.0)) / 2.0},
      {"no-axis", "invisible", "lower", invisible_lower.ratio, 2.0 + std::sqrt(5.0)},
  };

  char line[256];
  std::string csv = "axis_model,boundary_model,bound,computed,paper,abs_diff\n";
  std::printf("%-10s %-14s %-6s %-12s %-12s %s\n", "axis", "boundary", "bound", "computed",
              "paper", "abs_diff");
  for (const Row& row : rows) {
    const double diff = std::fabs(row.computed - row.paper);
    std::printf("%-10s %-14s %-6s %-12.6f %-12.6f %.3g\n", row.axis, row.boundary, row.bound,
                row.computed, row.paper, diff);
    std::snprintf(line, sizeof(line), "%s,%s,%s,%.12g,%.12g,%.3g\n", row.axis, row.boundary,
                  row.bound, row.computed, row.paper, diff);
    csv += line;
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open output path " << out_path << "\n";
      return kExitBadInput;
    }
    out << csv;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-robot delivery-to-boundary simulator and competitive-analysis toolkit"};
  app.require_subcommand(1);

  std::string instance_path, alg_id, events_path, domain_path, out_path, xs;
  double a = bombsquad::kOptimalExpansionFactor;
  double d_max = -1.0;
  double D_max = 180.0;
  long long budget = 2'000'000;
  int jobs = 0;
  long long seed = 0;  // reserved; all methods are deterministic

  CLI::App* run = app.add_subcommand("run", "simulate one instance and report the ratio");
  run->add_option("instance", instance_path, "instance JSON file")->required();
  run->add_option("--alg", alg_id, "algorithm id")->required();
  run->add_option("--a", a, "zigzag expansion factor");
  run->add_option("--xs", xs, "explicit zigzag turn distances, comma-separated");
  run->add_option("--events", events_path, "write the event log as JSON lines");
  run->add_option("--seed", seed, "reserved (deterministic)");

  CLI::App* search = app.add_subcommand("search", "adversarial instance search");
  search->add_option("--alg", alg_id, "algorithm id")->required();
  search->add_option("--domain", domain_path, "domain spec JSON file");
  search->add_option("--budget", budget, "evaluation budget");
  search->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  search->add_option("--out", out_path, "trace CSV path");
  search->add_option("--a", a, "zigzag expansion factor");
  search->add_option("--dmax", d_max, "start-distance bound (default 5; invisible: 1.2 * Dmax)");
  search->add_option("--Dmax", D_max, "critical-distance bound for the invisible model");
  search->add_option("--seed", seed, "reserved (deterministic)");

  CLI::App* bounds = app.add_subcommand("bounds", "recompute the headline bound table");
  bounds->add_option("--out", out_path, "table CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(instance_path, alg_id, a, xs, events_path);
    }
    if (search->parsed()) {
      return cmd_search(alg_id, domain_path, budget, jobs, out_path, a, d_max, D_max);
    }
    if (bounds->parsed()) {
      return cmd_bounds(out_path);
    }
  } catch (const bombsquad::SimulationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.kind() == bombsquad::SimulationError::Kind::kModelViolation ? kExitModelViolation
                                                                           : kExitNontermination;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
