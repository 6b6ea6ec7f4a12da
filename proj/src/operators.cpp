#include "agsac/operators.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace agsac {

std::vector<double> normalize_fitness(const std::vector<int>& fitnesses) {
  if (fitnesses.empty()) {
    throw std::invalid_argument("normalize_fitness: empty input");
  }
  const auto [lo, hi] = std::minmax_element(fitnesses.begin(), fitnesses.end());
  std::vector<double> out(fitnesses.size(), 0.0);
  if (*hi == *lo) return out;
  const double range = static_cast<double>(*hi - *lo);
  for (std::size_t i = 0; i < fitnesses.size(); ++i) {
    out[i] = static_cast<double>(fitnesses[i] - *lo) / range;
  }
  return out;
}

double crossover_probability(double norm_fitness, double gamma) {
  return std::pow(norm_fitness, gamma);
}

double mutation_probability(double norm_fitness, double delta) {
  return std::exp(-norm_fitness / delta);
}

namespace {

// Resamples any gene that repeats an earlier one, drawing from the wheel and
// excluding every value the chromosome currently holds elsewhere.
void repair_duplicates(Chromosome& c, const RouletteWheel& wheel, Rng& rng) {
  auto& g = c.genes;
  for (std::size_t i = 1; i < g.size(); ++i) {
    const bool dup =
        std::find(g.begin(), g.begin() + static_cast<long>(i), g[i]) !=
        g.begin() + static_cast<long>(i);
    if (!dup) continue;
    std::vector<int> excluded;
    excluded.reserve(g.size() - 1);
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k != i) excluded.push_back(g[k]);
    }
    g[i] = wheel.sample(rng, excluded);
  }
}

}  // namespace

std::pair<Chromosome, Chromosome> crossover_with_mask(
    const Chromosome& a, const Chromosome& b,
    const std::vector<bool>& take_first, const RouletteWheel& wheel,
    Rng& rng) {
  assert(a.genes.size() == b.genes.size());
  assert(take_first.size() == a.genes.size());
  const std::size_t m = a.genes.size();

  Chromosome c1, c2;
  c1.genes.resize(m);
  c2.genes.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    c1.genes[i] = take_first[i] ? a.genes[i] : b.genes[i];
    c2.genes[i] = take_first[i] ? b.genes[i] : a.genes[i];
  }
  repair_duplicates(c1, wheel, rng);
  repair_duplicates(c2, wheel, rng);
  return {std::move(c1), std::move(c2)};
}

std::pair<Chromosome, Chromosome> uniform_crossover(const Chromosome& a,
                                                    const Chromosome& b,
                                                    const RouletteWheel& wheel,
                                                    Rng& rng) {
  std::vector<bool> take_first(a.genes.size());
  for (std::size_t i = 0; i < take_first.size(); ++i) {
    take_first[i] = rng.bernoulli(0.5);
  }
  return crossover_with_mask(a, b, take_first, wheel, rng);
}

Chromosome mutate_full(const Chromosome& c, const RouletteWheel& wheel,
                       Rng& rng) {
  Chromosome out;
  out.genes.reserve(c.genes.size());
  for (std::size_t i = 0; i < c.genes.size(); ++i) {
    out.genes.push_back(wheel.sample(rng, out.genes));
  }
  return out;
}

int uniform_excluding(int n, std::vector<int> excluded, Rng& rng) {
  assert(static_cast<int>(excluded.size()) < n);
  std::sort(excluded.begin(), excluded.end());
  int v = rng.uniform_int(0, n - static_cast<int>(excluded.size()));
  for (int e : excluded) {
    if (v >= e) ++v;
  }
  return v;
}

int mutate_genes_uniform(Chromosome& c, int n, double per_gene_probability,
                         Rng& rng) {
  int fired = 0;
  for (std::size_t i = 0; i < c.genes.size(); ++i) {
    if (!rng.bernoulli(per_gene_probability)) continue;
    ++fired;
    std::vector<int> others;
    others.reserve(c.genes.size() - 1);
    for (std::size_t k = 0; k < c.genes.size(); ++k) {
      if (k != i) others.push_back(c.genes[k]);
    }
    c.genes[i] = uniform_excluding(n, std::move(others), rng);
  }
  if (fired > 0) c.fitness.reset();
  return fired;
}

std::vector<int> random_distinct_genes(int m, int n, Rng& rng) {
  assert(m <= n);
  std::vector<int> genes;
  genes.reserve(m);
  while (static_cast<int>(genes.size()) < m) {
    const int g = rng.uniform_int(0, n);
    if (std::find(genes.begin(), genes.end(), g) == genes.end()) {
      genes.push_back(g);
    }
  }
  return genes;
}

}  // namespace agsac
