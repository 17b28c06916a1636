#ifndef DYNR_SCENARIO_HPP
#define DYNR_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynr/verify.hpp"

namespace dynr {

struct RunOptions {
  std::string scenario;
  std::vector<cplx> epsilons;  // empty: scenario defaults
  int samples = 20;
  std::uint64_t seed = 42;
  double radius = 0.4;
  std::string tolerance_tier;  // "", "analytic", "fd"
  std::string config_path;     // custom algebra / qt definition
};

struct SamplePlan {
  double radius = 0.4;
  std::uint64_t seed = 42;
  double pole_guard = 0.1;
  double semisimple_defect_max = 1e-6;
  double root_pairing_min = 0.05;
};

/// Deterministic rejection sampler over the complex ball of the plan radius.
/// Throws ConstructionError after 10^4 consecutive rejections.
std::vector<Vec> sample_points(const SamplePlan& plan, int dim, int count,
                               const std::function<bool(const Vec&)>& admissible,
                               int* rejected = nullptr);

struct ScenarioInfo {
  std::string name;
  std::string description;
};

std::vector<ScenarioInfo> list_scenarios();
std::string describe_scenario(const std::string& name);

struct RunResult {
  nlohmann::json report;
  int exit_code = 0;  // 0 all pass, 1 verification failure, 2 construction error
};

RunResult run_scenario(const RunOptions& options);

/// Custom algebra (and optional quasitriangular pair) from the documented
/// text config format.
struct CustomConfig {
  AlgebraPtr algebra;
  bool has_qt = false;
  Mat qt_r_skew;
  Mat qt_omega;
};

CustomConfig load_config(const std::string& path);

/// Parses "0.5", "-2", "1+0.3i", "0.3i", "i" into a complex number.
cplx parse_complex(const std::string& text);

}  // namespace dynr

#endif
