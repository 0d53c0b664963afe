#include "sercor/montecarlo.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "sercor/errors.hpp"
#include "sercor/rng.hpp"
#include "sercor/stat_functions.hpp"

namespace sercor {

namespace {

constexpr int kArBurnIn = 200;
constexpr double kDesignAr = 0.2;

double draw(ErrorLaw law, std::mt19937_64& rng, std::normal_distribution<double>& normal,
            std::uniform_real_distribution<double>& uniform,
            std::gamma_distribution<double>& gamma) {
  switch (law) {
    case ErrorLaw::Normal01: return normal(rng);
    case ErrorLaw::UniformM11: return uniform(rng);
    case ErrorLaw::Gamma4Half: return gamma(rng) - 2.0;
  }
  return 0.0;
}

std::vector<int> scenario_lags(const SimulationScenario& s) {
  if (s.q == 0) return {0, s.tau};
  std::vector<int> lags(s.q + 1);
  for (int t = 0; t <= s.q; ++t) lags[t] = t;
  return lags;
}

TestOptions scenario_options(const SimulationScenario& s) {
  TestOptions opt;
  opt.alpha = s.alpha;
  opt.variance = s.variance;
  opt.nu4 = s.nu4;
  opt.robust = s.robust;
  return opt;
}

}  // namespace

void validate_scenario(const SimulationScenario& s) {
  if (s.n < 2 || s.p < 1 || s.n - s.p < 2) {
    throw ConfigError("scenario needs n >= 2, p >= 1, n - p >= 2");
  }
  if (s.f < 0 || s.f > s.p) throw ConfigError("scenario needs 0 <= f <= p");
  if (s.replications < 1) throw ConfigError("scenario needs at least one replication");
  if (!(s.alpha > 0.0 && s.alpha < 1.0)) throw ConfigError("alpha must be in (0,1)");
  const int max_lag = s.q == 0 ? s.tau : s.q;
  if (max_lag < 1 || max_lag >= s.n - s.p) {
    throw ConfigError("test lag must satisfy 1 <= lag < n - p");
  }
  switch (s.alternative.kind) {
    case Alternative::Kind::Null:
      break;
    case Alternative::Kind::AR1:
      if (!(std::abs(s.alternative.rho1) < 1.0)) {
        throw NonstationaryParameters("AR(1) needs |rho| < 1");
      }
      break;
    case Alternative::Kind::AR2: {
      const double r1 = s.alternative.rho1;
      const double r2 = s.alternative.rho2;
      if (!(std::abs(r2) < 1.0 && r2 + r1 < 1.0 && r2 - r1 < 1.0)) {
        throw NonstationaryParameters("AR(2) coefficients outside the stationarity triangle");
      }
      break;
    }
  }
}

Eigen::MatrixXd generate_design(int n, int p, int f, std::mt19937_64& rng) {
  if (f < 0 || f > p) throw DimensionError("generate_design needs 0 <= f <= p");
  Eigen::MatrixXd x(n, p);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::student_t_distribution<double> t5(5.0);
  const double stationary_sd = 1.0 / std::sqrt(1.0 - kDesignAr * kDesignAr);
  for (int j = 0; j < f; ++j) {
    double prev = stationary_sd * normal(rng);
    for (int t = 0; t < n; ++t) {
      prev = kDesignAr * prev + normal(rng);
      x(t, j) = prev;
    }
  }
  for (int j = f; j < p; ++j) {
    for (int t = 0; t < n; ++t) x(t, j) = t5(rng);
  }
  return x;
}

Eigen::VectorXd generate_errors(int n, ErrorLaw law, const Alternative& alt,
                                std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::gamma_distribution<double> gamma(4.0, 0.5);
  Eigen::VectorXd eps(n);

  switch (alt.kind) {
    case Alternative::Kind::Null:
      for (int t = 0; t < n; ++t) eps(t) = draw(law, rng, normal, uniform, gamma);
      return eps;
    case Alternative::Kind::AR1: {
      if (!(std::abs(alt.rho1) < 1.0)) throw NonstationaryParameters("AR(1) needs |rho| < 1");
      double prev = 0.0;
      for (int t = -kArBurnIn; t < n; ++t) {
        prev = alt.rho1 * prev + draw(law, rng, normal, uniform, gamma);
        if (t >= 0) eps(t) = prev;
      }
      return eps;
    }
    case Alternative::Kind::AR2: {
      if (!(std::abs(alt.rho2) < 1.0 && alt.rho2 + alt.rho1 < 1.0 &&
            alt.rho2 - alt.rho1 < 1.0)) {
        throw NonstationaryParameters("AR(2) coefficients outside the stationarity triangle");
      }
      double prev1 = 0.0;
      double prev2 = 0.0;
      for (int t = -kArBurnIn; t < n; ++t) {
        const double cur = alt.rho1 * prev1 + alt.rho2 * prev2 +
                           draw(law, rng, normal, uniform, gamma);
        prev2 = prev1;
        prev1 = cur;
        if (t >= 0) eps(t) = cur;
      }
      return eps;
    }
  }
  throw ConfigError("unknown alternative");
}

SimulationResult run_scenario(const SimulationScenario& s, int workers,
                              bool keep_statistics) {
  validate_scenario(s);
  const auto start = std::chrono::steady_clock::now();
  workers = std::max(1, workers);

  const std::vector<int> lags = scenario_lags(s);
  const TestOptions opt = scenario_options(s);

  std::optional<Eigen::MatrixXd> fixed_x;
  std::optional<SerialTestEngine> fixed_engine;
  if (s.fixed_design) {
    auto rng = replication_rng(s.master_seed, kDesignStream);
    fixed_x.emplace(generate_design(s.n, s.p, s.f, rng));
    fixed_engine.emplace(*fixed_x, lags, s.robust);
  }

  const int reps = s.replications;
  std::vector<std::uint8_t> outcome(reps, 0);  // 0 accept, 1 reject, 2 errored
  std::vector<double> stats;
  if (keep_statistics) stats.assign(reps, std::numeric_limits<double>::quiet_NaN());

  std::mutex failure_mutex;
  std::exception_ptr failure;

  auto work = [&](int worker_id) {
    try {
      for (int i = worker_id; i < reps; i += workers) {
        auto rng = replication_rng(s.master_seed, static_cast<std::uint64_t>(i));
        try {
          const Eigen::MatrixXd* x = nullptr;
          const SerialTestEngine* engine = nullptr;
          std::optional<Eigen::MatrixXd> local_x;
          std::optional<SerialTestEngine> local_engine;
          if (s.fixed_design) {
            x = &*fixed_x;
            engine = &*fixed_engine;
          } else {
            local_x.emplace(generate_design(s.n, s.p, s.f, rng));
            local_engine.emplace(*local_x, lags, s.robust);
            x = &*local_x;
            engine = &*local_engine;
          }
          Eigen::VectorXd y = generate_errors(s.n, s.law, s.alternative, rng);
          if (s.beta != 0.0) y += s.beta * x->rowwise().sum();
          const TestReport rep = s.q == 0 ? engine->lag_test(y, s.tau, opt)
                                          : engine->portmanteau_test(y, s.q, opt);
          outcome[i] = rep.reject ? 1 : 0;
          if (keep_statistics) stats[i] = rep.statistic;
        } catch (const Error&) {
          outcome[i] = 2;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SimulationResult result;
  result.scenario = s;
  for (int i = 0; i < reps; ++i) {
    if (outcome[i] == 1) ++result.rejections;
    else if (outcome[i] == 2) ++result.errored;
  }
  result.rejection_rate = static_cast<double>(result.rejections) / reps;
  result.mc_std_error =
      std::sqrt(result.rejection_rate * (1.0 - result.rejection_rate) / reps);
  if (keep_statistics) result.statistics = std::move(stats);
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

NullDistributionStudy null_distribution_study(SimulationScenario s, int workers) {
  if (s.alternative.kind != Alternative::Kind::Null) {
    throw ConfigError("null distribution study requires the null alternative");
  }
  s.fixed_design = true;
  NullDistributionStudy study;
  study.result = run_scenario(s, workers, /*keep_statistics=*/true);

  std::vector<double> sample;
  sample.reserve(study.result.statistics.size());
  for (double v : study.result.statistics) {
    if (std::isfinite(v)) sample.push_back(v);
  }
  const KsResult ks = ks_test_standard_normal(std::move(sample));
  study.ks_distance = ks.distance;
  study.ks_p_value = ks.p_value;
  return study;
}

int resolve_worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SERCOR_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace sercor
