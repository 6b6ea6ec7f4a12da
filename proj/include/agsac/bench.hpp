#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "agsac/dataset.hpp"
#include "agsac/engine.hpp"

namespace agsac {

enum class Engine { ransac, gasac, adaptive };

const char* engine_name(Engine e);
std::optional<Engine> parse_engine(const std::string& name);

// Experiment description: repeated paired runs at a fixed model budget across
// inlier ratios. Within a repetition every engine consumes the identical
// dataset and budget, seeded per repetition.
struct BenchConfig {
  Task task = Task::line;
  int n = 200;
  std::vector<double> inlier_ratios = {0.1, 0.2, 0.3, 0.4};
  int budget = 400;
  int repetitions = 100;
  std::vector<Engine> engines = {Engine::ransac, Engine::gasac,
                                 Engine::adaptive};
  AdaptiveParams params;
  std::uint64_t base_seed = 1;
  std::filesystem::path output_dir;

  // Dataset shape. The defaults make labels unambiguous: outliers clear the
  // hidden model by 3x the threshold while inlier noise stays inside it.
  double noise_sigma = 1.75;
  double outlier_box = 50.0;
  double inlier_threshold = 1.0;

  double ransac_confidence = 1.0 - 1e-12;
};

// Mean best-inlier count after t models generated, t = 1..budget, averaged
// over repetitions. Forward-filled on the per-model grid, so curves from
// engines with different generation sizes are comparable.
struct AggregateCurve {
  Engine engine;
  std::vector<double> mean_best;
};

struct RatioCurves {
  double inlier_ratio;
  std::vector<AggregateCurve> curves;
};

struct SummaryRow {
  Engine engine;
  double mean_final_score = 0.0;
  double improvement_pct = 0.0;  // vs the ransac baseline
};

struct BenchResult {
  std::vector<RatioCurves> per_ratio;
  std::vector<SummaryRow> summary;  // empty when ransac was not run
};

// Raised on a bad configuration; carries the offending field name.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

void validate_config(const BenchConfig& config);

// Runs the full protocol and, when output_dir is set, writes one
// curve_<ratio_percent>.csv per ratio plus summary.csv. Outputs are a
// deterministic function of the config; nothing is written until every run
// has finished.
BenchResult run_benchmark(const BenchConfig& config);

// Mean final score per engine with improvement relative to ransac, which
// must be present.
std::vector<SummaryRow> summarize_final(
    const std::vector<RatioCurves>& per_ratio);

std::string curve_csv(const RatioCurves& ratio_curves);
std::string summary_csv(const std::vector<SummaryRow>& summary);
std::string curve_file_name(double inlier_ratio);

}  // namespace agsac
