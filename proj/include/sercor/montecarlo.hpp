#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sercor/serial_tests.hpp"

namespace sercor {

enum class ErrorLaw {
  Normal01,   // N(0,1)
  UniformM11, // U(-1,1)
  Gamma4Half, // Gamma(shape 4, scale 1/2) centered by -2: mean 0, variance 1
};

struct Alternative {
  enum class Kind { Null, AR1, AR2 };

  static Alternative null() { return {Kind::Null, 0.0, 0.0}; }
  static Alternative ar1(double rho) { return {Kind::AR1, rho, 0.0}; }
  static Alternative ar2(double rho1, double rho2) { return {Kind::AR2, rho1, rho2}; }

  Kind kind = Kind::Null;
  double rho1 = 0.0;
  double rho2 = 0.0;
};

// One table cell: a design/error configuration plus the test to run on it.
struct SimulationScenario {
  int n = 0;
  int p = 0;
  int f = 0;  // leading columns following the lag-dependent recursion
  ErrorLaw law = ErrorLaw::Normal01;
  Alternative alternative = Alternative::null();
  int q = 0;    // 0 => lag-tau test on `tau`; >= 1 => portmanteau test T(q)
  int tau = 1;
  double alpha = 0.05;
  int replications = 10000;
  std::uint64_t master_seed = 0;
  bool fixed_design = false;  // reuse one design draw instead of redrawing per replication
  bool robust = false;
  VarianceMode variance = VarianceMode::Exact;
  Nu4Mode nu4 = Nu4Mode::estimate();
  double beta = 0.0;  // regression coefficients, all equal to this value
  std::string label;
};

void validate_scenario(const SimulationScenario& s);

// Columns 1..f: x_t = 0.2 x_{t-1} + u_t with u_t ~ N(0,1), started from the
// stationary law N(0, 1/0.96). Columns f+1..p: iid Student t(5).
Eigen::MatrixXd generate_design(int n, int p, int f, std::mt19937_64& rng);

// Null: iid draws from the law (gamma centered to mean zero). AR(1)/AR(2):
// the recursion driven by iid innovations from the law, 200-step burn-in.
Eigen::VectorXd generate_errors(int n, ErrorLaw law, const Alternative& alt,
                                std::mt19937_64& rng);

struct SimulationResult {
  SimulationScenario scenario;
  double rejection_rate = 0.0;  // rejections / replications
  double mc_std_error = 0.0;    // sqrt(rate (1-rate) / replications)
  long rejections = 0;
  long errored = 0;  // replications that raised an error; never silently dropped
  std::vector<double> statistics;  // per-replication statistics when requested
  double elapsed_seconds = 0.0;    // informational; never serialized
};

// Runs the scenario's replications across `workers` threads. Each replication
// owns a private RNG stream keyed by (master_seed, index), so the result is
// identical for any worker count.
SimulationResult run_scenario(const SimulationScenario& s, int workers,
                              bool keep_statistics = false);

struct NullDistributionStudy {
  SimulationResult result;
  double ks_distance = 0.0;
  double ks_p_value = 0.0;
};

// Retains all statistic values under the null and compares them against
// N(0,1). The design is drawn once and held fixed across replications.
NullDistributionStudy null_distribution_study(SimulationScenario s, int workers);

// requested > 0 wins; otherwise SERCOR_WORKERS, then hardware concurrency.
int resolve_worker_count(int requested);

}  // namespace sercor
