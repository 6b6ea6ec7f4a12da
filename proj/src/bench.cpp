#include "agsac/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "agsac/synth.hpp"

namespace agsac {

namespace {

RunTrace run_engine(Engine engine, const Estimator& estimator,
                    const Dataset& data, const BenchConfig& config,
                    std::uint64_t seed) {
  const Budget budget{config.budget, 0};
  switch (engine) {
    case Engine::ransac:
      return run_ransac(estimator, data, budget, seed,
                        config.ransac_confidence);
    case Engine::gasac:
      return run_gasac(estimator, data, config.params.population_size, budget,
                       seed);
    case Engine::adaptive:
      return run_adaptive_gasac(estimator, data, config.params, budget, seed);
  }
  throw std::logic_error("run_engine: unknown engine");
}

// Forward-fills a trace onto the per-model-count grid 1..budget and adds it
// into the integer accumulator (exact, so aggregation order cannot matter).
void accumulate(const RunTrace& trace, std::vector<long long>& sums) {
  int best = 0;
  std::size_t next = 0;
  for (std::size_t t = 0; t < sums.size(); ++t) {
    if (next < trace.series.size() &&
        trace.series[next].models_generated == static_cast<int>(t) + 1) {
      best = trace.series[next].best_inliers;
      ++next;
    }
    sums[t] += best;
  }
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

}  // namespace

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::ransac: return "ransac";
    case Engine::gasac: return "gasac";
    case Engine::adaptive: return "adaptive";
  }
  return "?";
}

std::optional<Engine> parse_engine(const std::string& name) {
  if (name == "ransac") return Engine::ransac;
  if (name == "gasac") return Engine::gasac;
  if (name == "adaptive") return Engine::adaptive;
  return std::nullopt;
}

void validate_config(const BenchConfig& config) {
  if (config.n < 8) throw ConfigError("n", "must be >= 8");
  if (config.inlier_ratios.empty()) {
    throw ConfigError("ratios", "at least one inlier ratio is required");
  }
  const int m = config.task == Task::line ? 2 : 4;
  for (double r : config.inlier_ratios) {
    if (!(r > 0.0 && r <= 1.0)) {
      throw ConfigError("ratios", "each ratio must be in (0, 1]");
    }
    if (std::floor(config.n * r + 1e-9) < m) {
      throw ConfigError("ratios",
                        "floor(n * ratio) below the minimal sample size");
    }
  }
  if (config.repetitions < 1) throw ConfigError("reps", "must be >= 1");
  if (config.engines.empty()) {
    throw ConfigError("engines", "at least one engine is required");
  }
  for (std::size_t i = 0; i < config.engines.size(); ++i) {
    for (std::size_t j = i + 1; j < config.engines.size(); ++j) {
      if (config.engines[i] == config.engines[j]) {
        throw ConfigError("engines", "duplicate engine");
      }
    }
  }
  if (config.budget < config.params.population_size) {
    throw ConfigError("budget", "must be >= the population size");
  }
  if (config.budget < 1) throw ConfigError("budget", "must be >= 1");
  if (config.params.population_size < 4) {
    throw ConfigError("pop", "must be >= 4");
  }
  if (config.params.gamma < 1.0) throw ConfigError("gamma", "must be >= 1");
  if (!(config.params.delta > 0.0 && config.params.delta <= 1.0)) {
    throw ConfigError("delta", "must be in (0, 1]");
  }
  if (config.noise_sigma < 0.0) throw ConfigError("sigma", "must be >= 0");
  if (config.outlier_box <= 0.0) throw ConfigError("box", "must be > 0");
  if (config.inlier_threshold <= 0.0) {
    throw ConfigError("threshold", "must be > 0");
  }
}

BenchResult run_benchmark(const BenchConfig& config) {
  validate_config(config);
  const auto estimator =
      make_estimator(config.task, config.inlier_threshold);

  BenchResult result;
  for (double ratio : config.inlier_ratios) {
    std::vector<std::vector<long long>> sums(
        config.engines.size(),
        std::vector<long long>(config.budget, 0));

    for (int rep = 0; rep < config.repetitions; ++rep) {
      const std::uint64_t seed = config.base_seed + rep;
      SyntheticSpec spec;
      spec.task = config.task;
      spec.n = config.n;
      spec.inlier_ratio = ratio;
      spec.noise_sigma = config.noise_sigma;
      spec.outlier_box = config.outlier_box;
      spec.seed = seed;
      const Dataset data = generate(spec, config.inlier_threshold);

      for (std::size_t e = 0; e < config.engines.size(); ++e) {
        const RunTrace trace =
            run_engine(config.engines[e], *estimator, data, config, seed);
        accumulate(trace, sums[e]);
      }
    }

    RatioCurves rc;
    rc.inlier_ratio = ratio;
    for (std::size_t e = 0; e < config.engines.size(); ++e) {
      AggregateCurve curve;
      curve.engine = config.engines[e];
      curve.mean_best.reserve(config.budget);
      for (long long s : sums[e]) {
        curve.mean_best.push_back(static_cast<double>(s) /
                                  config.repetitions);
      }
      rc.curves.push_back(std::move(curve));
    }
    result.per_ratio.push_back(std::move(rc));
  }

  const bool has_ransac =
      std::find(config.engines.begin(), config.engines.end(),
                Engine::ransac) != config.engines.end();
  if (has_ransac) result.summary = summarize_final(result.per_ratio);

  if (!config.output_dir.empty()) {
    std::filesystem::create_directories(config.output_dir);
    for (const auto& rc : result.per_ratio) {
      std::ofstream out(config.output_dir / curve_file_name(rc.inlier_ratio),
                        std::ios::binary);
      out << curve_csv(rc);
    }
    if (has_ransac) {
      std::ofstream out(config.output_dir / "summary.csv", std::ios::binary);
      out << summary_csv(result.summary);
    }
  }
  return result;
}

std::vector<SummaryRow> summarize_final(
    const std::vector<RatioCurves>& per_ratio) {
  if (per_ratio.empty()) {
    throw std::invalid_argument("summarize_final: no curves");
  }

  // Mean final score per engine across every ratio.
  std::vector<Engine> engines;
  for (const auto& c : per_ratio.front().curves) engines.push_back(c.engine);
  std::vector<double> finals(engines.size(), 0.0);
  for (const auto& rc : per_ratio) {
    for (std::size_t e = 0; e < engines.size(); ++e) {
      finals[e] += rc.curves[e].mean_best.back();
    }
  }
  for (auto& f : finals) f /= static_cast<double>(per_ratio.size());

  const auto ransac_it = std::find(engines.begin(), engines.end(),
                                   Engine::ransac);
  if (ransac_it == engines.end()) {
    throw std::invalid_argument(
        "summarize_final: ransac baseline missing from curves");
  }
  const double baseline = finals[ransac_it - engines.begin()];

  std::vector<SummaryRow> rows;
  for (std::size_t e = 0; e < engines.size(); ++e) {
    SummaryRow row;
    row.engine = engines[e];
    row.mean_final_score = finals[e];
    row.improvement_pct =
        baseline > 0.0 ? (finals[e] - baseline) / baseline * 100.0 : 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::string curve_file_name(double inlier_ratio) {
  const double percent = inlier_ratio * 100.0;
  const double rounded = std::round(percent);
  char buf[64];
  if (std::abs(percent - rounded) < 1e-9) {
    std::snprintf(buf, sizeof(buf), "curve_%d.csv",
                  static_cast<int>(rounded));
  } else {
    std::snprintf(buf, sizeof(buf), "curve_%g.csv", percent);
  }
  return buf;
}

std::string curve_csv(const RatioCurves& rc) {
  // Columns in fixed engine order, restricted to the engines present.
  std::vector<const AggregateCurve*> ordered;
  for (Engine e : {Engine::ransac, Engine::gasac, Engine::adaptive}) {
    for (const auto& c : rc.curves) {
      if (c.engine == e) ordered.push_back(&c);
    }
  }

  std::string out = "models";
  for (const auto* c : ordered) {
    out += ",";
    out += engine_name(c->engine);
  }
  out += "\n";

  const std::size_t budget = ordered.front()->mean_best.size();
  for (std::size_t t = 0; t < budget; ++t) {
    out += std::to_string(t + 1);
    for (const auto* c : ordered) {
      out += "," + format_fixed(c->mean_best[t], 6);
    }
    out += "\n";
  }
  return out;
}

std::string summary_csv(const std::vector<SummaryRow>& summary) {
  std::string out = "engine,mean_final_score,improvement_pct\n";
  std::vector<const SummaryRow*> ordered;
  for (Engine e : {Engine::ransac, Engine::gasac, Engine::adaptive}) {
    for (const auto& row : summary) {
      if (row.engine == e) ordered.push_back(&row);
    }
  }
  for (const auto* row : ordered) {
    out += std::string(engine_name(row->engine)) + "," +
           format_fixed(row->mean_final_score, 4) + "," +
           format_fixed(row->improvement_pct, 1) + "\n";
  }
  return out;
}

}  // namespace agsac
