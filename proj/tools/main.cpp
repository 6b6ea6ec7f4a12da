// Command-line front end: `bench` reproduces the fixed-budget comparison
// protocol, `fit` runs one engine on a CSV dataset, `gen` writes synthetic
// datasets for fixture pinning.

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "agsac/bench.hpp"
#include "agsac/synth.hpp"

namespace {

using namespace agsac;

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_ratios(const std::string& csv) {
  std::vector<double> out;
  for (const auto& item : split_list(csv)) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("ratios", "'" + item + "' is not a number");
    }
  }
  return out;
}

std::vector<Engine> parse_engines(const std::string& csv) {
  std::vector<Engine> out;
  for (const auto& item : split_list(csv)) {
    const auto engine = parse_engine(item);
    if (!engine) throw ConfigError("engines", "unknown engine '" + item + "'");
    out.push_back(*engine);
  }
  return out;
}

Task parse_task_or_throw(const std::string& name) {
  const auto task = parse_task(name);
  if (!task) throw ConfigError("task", "unknown task '" + name + "'");
  return *task;
}

void print_model(const Model& model) {
  std::printf("model:");
  for (double v : model.params) std::printf(" %.12g", v);
  std::printf("\n");
}

struct BenchFlags {
  std::string task = "line";
  int n = 200;
  std::string ratios = "0.1,0.2,0.3,0.4";
  int budget = 400;
  int reps = 100;
  std::string engines = "ransac,gasac,adaptive";
  double gamma = AdaptiveParams{}.gamma;
  double delta = AdaptiveParams{}.delta;
  int pop = AdaptiveParams{}.population_size;
  std::uint64_t seed = 1;
  std::string out;
  double sigma = BenchConfig{}.noise_sigma;
  double box = BenchConfig{}.outlier_box;
  double threshold = BenchConfig{}.inlier_threshold;
  std::string config_file;
};

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Flat `key = value` file with `#` comments. Keys mirror the long flag
// names; a flag given on the command line wins over the file.
void apply_config_file(BenchFlags& flags, const CLI::App& cmd) {
  std::ifstream in(flags.config_file);
  if (!in) {
    throw ConfigError("config", "cannot open '" + flags.config_file + "'");
  }
  const auto overridden = [&](const char* name) {
    return cmd.count(std::string("--") + name) > 0;
  };
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trimmed(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config", "line " + std::to_string(line_no) +
                                      ": expected key = value");
    }
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));
    try {
      if (key == "task") {
        if (!overridden("task")) flags.task = value;
      } else if (key == "n") {
        if (!overridden("n")) flags.n = std::stoi(value);
      } else if (key == "ratios") {
        if (!overridden("ratios")) flags.ratios = value;
      } else if (key == "budget") {
        if (!overridden("budget")) flags.budget = std::stoi(value);
      } else if (key == "reps") {
        if (!overridden("reps")) flags.reps = std::stoi(value);
      } else if (key == "engines") {
        if (!overridden("engines")) flags.engines = value;
      } else if (key == "gamma") {
        if (!overridden("gamma")) flags.gamma = std::stod(value);
      } else if (key == "delta") {
        if (!overridden("delta")) flags.delta = std::stod(value);
      } else if (key == "pop") {
        if (!overridden("pop")) flags.pop = std::stoi(value);
      } else if (key == "seed") {
        if (!overridden("seed")) flags.seed = std::stoull(value);
      } else if (key == "out") {
        if (!overridden("out")) flags.out = value;
      } else if (key == "sigma") {
        if (!overridden("sigma")) flags.sigma = std::stod(value);
      } else if (key == "box") {
        if (!overridden("box")) flags.box = std::stod(value);
      } else if (key == "threshold") {
        if (!overridden("threshold")) flags.threshold = std::stod(value);
      } else {
        throw ConfigError("config", "unknown key '" + key + "'");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError(key, "bad value '" + value + "'");
    }
  }
}

int run_bench(const BenchFlags& flags) {
  BenchConfig config;
  config.task = parse_task_or_throw(flags.task);
  config.n = flags.n;
  config.inlier_ratios = parse_ratios(flags.ratios);
  config.budget = flags.budget;
  config.repetitions = flags.reps;
  config.engines = parse_engines(flags.engines);
  config.params.gamma = flags.gamma;
  config.params.delta = flags.delta;
  config.params.population_size = flags.pop;
  config.base_seed = flags.seed;
  config.output_dir = flags.out;
  config.noise_sigma = flags.sigma;
  config.outlier_box = flags.box;
  config.inlier_threshold = flags.threshold;
  if (flags.out.empty()) throw ConfigError("out", "output directory required");

  const auto result = run_benchmark(config);

  for (const auto& rc : result.per_ratio) {
    std::printf("wrote %s\n",
                (config.output_dir / curve_file_name(rc.inlier_ratio))
                    .string()
                    .c_str());
  }
  if (!result.summary.empty()) {
    std::printf("wrote %s\n",
                (config.output_dir / "summary.csv").string().c_str());
    for (const auto& row : result.summary) {
      std::printf("%-8s mean final score %8.4f  improvement %+.1f%%\n",
                  engine_name(row.engine), row.mean_final_score,
                  row.improvement_pct);
    }
  }
  return 0;
}

struct FitFlags {
  std::string input;
  std::string engine = "adaptive";
  double threshold = 1.0;
  int budget = 400;
  std::uint64_t seed = 1;
  double gamma = AdaptiveParams{}.gamma;
  double delta = AdaptiveParams{}.delta;
  int pop = AdaptiveParams{}.population_size;
  double confidence = 1.0 - 1e-12;
};

int run_fit(const FitFlags& flags) {
  const auto engine = parse_engine(flags.engine);
  if (!engine) {
    throw ConfigError("engine", "unknown engine '" + flags.engine + "'");
  }
  if (flags.threshold <= 0) throw ConfigError("threshold", "must be > 0");

  const Dataset data = Dataset::load_csv(flags.input);
  const auto estimator = make_estimator(data.task(), flags.threshold);
  const Budget budget{flags.budget, 0};

  RunTrace trace;
  switch (*engine) {
    case Engine::ransac:
      trace = run_ransac(*estimator, data, budget, flags.seed,
                         flags.confidence);
      break;
    case Engine::gasac:
      trace = run_gasac(*estimator, data, flags.pop, budget, flags.seed);
      break;
    case Engine::adaptive: {
      AdaptiveParams params;
      params.gamma = flags.gamma;
      params.delta = flags.delta;
      params.population_size = flags.pop;
      trace = run_adaptive_gasac(*estimator, data, params, budget,
                                 flags.seed);
      break;
    }
  }

  std::printf("task: %s\n", task_name(data.task()));
  std::printf("engine: %s\n", engine_name(*engine));
  std::printf("models_generated: %zu\n", trace.series.size());
  std::printf("best_inliers: %d\n", trace.best_inliers());
  print_model(trace.best_model);
  return 0;
}

struct GenFlags {
  std::string task = "line";
  int n = 200;
  double ratio = 0.3;
  double sigma = 1.0;
  double box = 50.0;
  double threshold = 1.0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenFlags& flags) {
  SyntheticSpec spec;
  spec.task = parse_task_or_throw(flags.task);
  spec.n = flags.n;
  spec.inlier_ratio = flags.ratio;
  spec.noise_sigma = flags.sigma;
  spec.outlier_box = flags.box;
  spec.seed = flags.seed;
  if (flags.out.empty()) throw ConfigError("out", "output file required");
  const Dataset data = generate(spec, flags.threshold);
  data.save_csv(flags.out);
  std::printf("wrote %s (%d observations)\n", flags.out.c_str(), data.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sample-consensus model fitting: RANSAC, GASAC, and an "
               "adaptive genetic engine, plus a benchmark harness"};
  app.require_subcommand(1);

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Run the repeated-benchmark protocol and write CSV curves");
  bench_cmd->add_option("--task", bench.task, "line or homography");
  bench_cmd->add_option("--n", bench.n, "dataset size");
  bench_cmd->add_option("--ratios", bench.ratios,
                        "comma-separated inlier ratios");
  bench_cmd->add_option("--budget", bench.budget, "models per run");
  bench_cmd->add_option("--reps", bench.reps, "repetitions per ratio");
  bench_cmd->add_option("--engines", bench.engines,
                        "comma-separated engine subset");
  bench_cmd->add_option("--gamma", bench.gamma, "crossover power factor");
  bench_cmd->add_option("--delta", bench.delta, "mutation decay factor");
  bench_cmd->add_option("--pop", bench.pop, "population size");
  bench_cmd->add_option("--seed", bench.seed, "base seed");
  bench_cmd->add_option("--out", bench.out, "output directory");
  bench_cmd->add_option("--sigma", bench.sigma, "inlier noise sigma");
  bench_cmd->add_option("--box", bench.box, "outlier box half-width");
  bench_cmd->add_option("--threshold", bench.threshold, "inlier threshold");
  bench_cmd->add_option("--config", bench.config_file,
                        "flat key = value file; flags override");

  FitFlags fit;
  auto* fit_cmd = app.add_subcommand(
      "fit", "Fit one model to a CSV dataset and print it");
  fit_cmd->add_option("--input", fit.input, "dataset CSV path")->required();
  fit_cmd->add_option("--engine", fit.engine, "ransac, gasac, or adaptive");
  fit_cmd->add_option("--threshold", fit.threshold, "inlier threshold");
  fit_cmd->add_option("--budget", fit.budget, "models to generate");
  fit_cmd->add_option("--seed", fit.seed, "run seed");
  fit_cmd->add_option("--gamma", fit.gamma, "crossover power factor");
  fit_cmd->add_option("--delta", fit.delta, "mutation decay factor");
  fit_cmd->add_option("--pop", fit.pop, "population size");
  fit_cmd->add_option("--confidence", fit.confidence,
                      "ransac early-stop confidence in (0,1)");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand(
      "gen", "Generate a labeled synthetic dataset CSV");
  gen_cmd->add_option("--task", gen.task, "line or homography");
  gen_cmd->add_option("--n", gen.n, "dataset size");
  gen_cmd->add_option("--ratio", gen.ratio, "inlier ratio in (0,1]");
  gen_cmd->add_option("--sigma", gen.sigma, "inlier noise sigma");
  gen_cmd->add_option("--box", gen.box, "outlier box half-width");
  gen_cmd->add_option("--threshold", gen.threshold,
                      "inlier threshold (outlier margin is 3x)");
  gen_cmd->add_option("--seed", gen.seed, "generation seed");
  gen_cmd->add_option("--out", gen.out, "output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (bench_cmd->parsed()) {
      if (!bench.config_file.empty()) apply_config_file(bench, *bench_cmd);
      return run_bench(bench);
    }
    if (fit_cmd->parsed()) return run_fit(fit);
    return run_gen(gen);
  } catch (const agsac::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
