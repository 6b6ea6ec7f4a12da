#include "agsac/engine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace agsac {

namespace {

void require_enough_data(const Estimator& estimator, const Dataset& data) {
  if (data.size() < estimator.minimal_sample_size()) {
    throw std::invalid_argument(
        "engine: dataset smaller than the minimal sample size");
  }
}

void require_budget_covers_population(const Budget& budget, int population) {
  if (budget.max_models < population) {
    throw std::invalid_argument(
        "engine: budget smaller than the population size");
  }
}

std::vector<int> fitnesses_of(const Population& pop) {
  std::vector<int> out;
  out.reserve(pop.members.size());
  for (const auto& c : pop.members) out.push_back(*c.fitness);
  return out;
}

// Index of the member carrying the current global best, by gene identity.
// Present by construction: the elite is exempt from mutation and ranks first
// among equal fitnesses at truncation.
int elite_index(const Population& pop, const Chromosome& global_best) {
  for (std::size_t i = 0; i < pop.members.size(); ++i) {
    if (pop.members[i].genes == global_best.genes) return static_cast<int>(i);
  }
  return -1;
}

// Highest fitness first; equal fitnesses keep their relative order. The
// member carrying the global best is then pinned to the front so neither
// truncation nor parent selection can ever drop it.
void sort_with_elite_first(std::vector<Chromosome>& members,
                           const Chromosome& global_best) {
  std::stable_sort(members.begin(), members.end(),
                   [](const Chromosome& a, const Chromosome& b) {
                     return *a.fitness > *b.fitness;
                   });
  const auto it = std::find_if(members.begin(), members.end(),
                               [&](const Chromosome& c) {
                                 return c.genes == global_best.genes;
                               });
  if (it != members.end()) std::rotate(members.begin(), it, it + 1);
}

// Keeps the first `size` members, preferring one representative per gene set
// (order-insensitive); duplicates fill any remaining slots. Assumes members
// are already sorted best-first.
void truncate_distinct_first(std::vector<Chromosome>& members, int size) {
  std::vector<std::vector<int>> seen;
  std::vector<Chromosome> kept, spare;
  for (auto& c : members) {
    auto key = c.genes;
    std::sort(key.begin(), key.end());
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(std::move(key));
      kept.push_back(std::move(c));
    } else {
      spare.push_back(std::move(c));
    }
  }
  for (auto& c : spare) {
    if (static_cast<int>(kept.size()) >= size) break;
    kept.push_back(std::move(c));
  }
  if (static_cast<int>(kept.size()) > size) kept.resize(size);
  members = std::move(kept);
}

Population make_initial_population(int size, int m, int n, Rng& rng) {
  Population pop;
  pop.members.reserve(size);
  for (int i = 0; i < size; ++i) {
    pop.members.push_back(Chromosome{random_distinct_genes(m, n, rng), {}});
  }
  return pop;
}

bool evaluate_dirty(Evaluator& ev, std::vector<Chromosome>& members) {
  for (auto& c : members) {
    if (c.dirty() && !ev.evaluate(c)) return false;
  }
  return true;
}

}  // namespace

Evaluator::Evaluator(const Estimator& estimator, const Dataset& data,
                     Budget budget)
    : estimator_(estimator), data_(data), budget_(budget) {
  trace_.series.reserve(budget.max_models);
}

bool Evaluator::evaluate(Chromosome& c) {
  if (!c.dirty()) {
    throw std::logic_error("evaluate: chromosome is already scored");
  }
  if (budget_.exhausted()) return false;

  ++budget_.used;
  auto model = estimator_.fit(data_, c.genes);
  const int fitness = model ? count_inliers(estimator_, *model, data_) : 0;
  c.fitness = fitness;

  if (fitness > best_score_) {
    best_score_ = fitness;
    best_chromosome_ = c;
    if (model) trace_.best_model = std::move(*model);
  }
  trace_.series.push_back({budget_.used, best_inliers()});
  return true;
}

RunTrace Evaluator::take_trace() {
  trace_.best_chromosome = best_chromosome_;
  return std::move(trace_);
}

long long ransac_iteration_bound(int best_inliers, int n, int m,
                                 double confidence) {
  const double w = static_cast<double>(best_inliers) / n;
  const double wm = std::pow(w, m);
  if (wm <= 0.0) return std::numeric_limits<long long>::max();
  if (wm >= 1.0) return 1;
  const double denom = std::log1p(-wm);
  const double num = std::log1p(-confidence);
  const double bound = std::ceil(num / denom);
  if (bound >= static_cast<double>(std::numeric_limits<long long>::max()))
    return std::numeric_limits<long long>::max();
  return std::max(1LL, static_cast<long long>(bound));
}

RunTrace run_ransac(const Estimator& estimator, const Dataset& data,
                    Budget budget, std::uint64_t seed, double confidence) {
  require_enough_data(estimator, data);
  if (confidence <= 0.0 || confidence >= 1.0) {
    throw std::invalid_argument("run_ransac: confidence must be in (0, 1)");
  }
  const int m = estimator.minimal_sample_size();
  const int n = data.size();
  Rng rng(seed);
  Evaluator ev(estimator, data, budget);

  long long iterations = 0;
  while (!ev.budget().exhausted()) {
    Chromosome c{random_distinct_genes(m, n, rng), {}};
    if (!ev.evaluate(c)) break;
    ++iterations;
    if (iterations >= ransac_iteration_bound(ev.best_inliers(), n, m,
                                             confidence)) {
      break;
    }
  }
  return ev.take_trace();
}

RunTrace run_gasac(const Estimator& estimator, const Dataset& data,
                   int population_size, Budget budget, std::uint64_t seed,
                   const GenerationObserver& observer) {
  require_enough_data(estimator, data);
  require_budget_covers_population(budget, population_size);
  if (population_size < 4) {
    throw std::invalid_argument("run_gasac: population size must be >= 4");
  }
  const int m = estimator.minimal_sample_size();
  const int n = data.size();
  const double per_gene_pm = 1.0 / (2.0 * m);
  Rng rng(seed);
  Evaluator ev(estimator, data, budget);
  const RouletteWheel uniform_wheel(n);

  Population pop = make_initial_population(population_size, m, n, rng);
  if (!evaluate_dirty(ev, pop.members)) return ev.take_trace();
  if (observer) observer(pop);

  while (!ev.budget().exhausted()) {
    sort_with_elite_first(pop.members, ev.best_chromosome());
    const int parent_count = population_size / 2;
    truncate_distinct_first(pop.members, parent_count);

    // Children from random parent pairs refill the dropped half. Children
    // that merely copy a parent are discarded while fresh pairings remain
    // affordable; re-scoring a known gene set costs budget and learns
    // nothing.
    const int refill = population_size - parent_count;
    std::vector<Chromosome> children;
    int attempts = 0;
    while (static_cast<int>(children.size()) < refill) {
      const int i = rng.uniform_int(0, parent_count);
      int j = rng.uniform_int(0, parent_count - 1);
      if (j >= i) ++j;
      const Chromosome& pa = pop.members[i];
      const Chromosome& pb = pop.members[j];
      auto [c1, c2] = uniform_crossover(pa, pb, uniform_wheel, rng);
      const bool accept_copies = ++attempts > 4 * refill;
      for (auto* child : {&c1, &c2}) {
        if (accept_copies ||
            (child->genes != pa.genes && child->genes != pb.genes)) {
          children.push_back(std::move(*child));
        }
      }
    }
    children.resize(refill);
    for (auto& c : children) pop.members.push_back(std::move(c));

    // One elite copy of the global best is exempt; further copies are
    // ordinary members and keep mutating.
    const int elite = elite_index(pop, ev.best_chromosome());
    for (int i = 0; i < population_size; ++i) {
      if (i == elite) continue;
      mutate_genes_uniform(pop.members[i], n, per_gene_pm, rng);
    }

    if (!evaluate_dirty(ev, pop.members)) break;
    ++pop.generation;
    if (observer) observer(pop);
    assert(elite_index(pop, ev.best_chromosome()) >= 0);
  }
  return ev.take_trace();
}

RunTrace run_adaptive_gasac(const Estimator& estimator, const Dataset& data,
                            const AdaptiveParams& params, Budget budget,
                            std::uint64_t seed,
                            const GenerationObserver& observer) {
  require_enough_data(estimator, data);
  require_budget_covers_population(budget, params.population_size);
  if (params.population_size < 4) {
    throw std::invalid_argument(
        "run_adaptive_gasac: population size must be >= 4");
  }
  if (params.gamma < 1.0) {
    throw std::invalid_argument("run_adaptive_gasac: gamma must be >= 1");
  }
  if (params.delta <= 0.0 || params.delta > 1.0) {
    throw std::invalid_argument(
        "run_adaptive_gasac: delta must be in (0, 1]");
  }
  const int b = params.population_size;
  const int m = estimator.minimal_sample_size();
  const int n = data.size();
  Rng rng(seed);
  Evaluator ev(estimator, data, budget);
  RouletteWheel wheel(n);

  Population pop = make_initial_population(b, m, n, rng);
  if (!evaluate_dirty(ev, pop.members)) return ev.take_trace();
  if (observer) observer(pop);

  while (!ev.budget().exhausted()) {
    const std::vector<double> norm = normalize_fitness(fitnesses_of(pop));

    // Parent pool by independent Bernoulli(Pc_i) draws; the two fittest
    // members are forced in when fewer than two are selected, so crossover
    // never starves.
    std::vector<int> pool;
    for (int i = 0; i < b; ++i) {
      if (rng.bernoulli(crossover_probability(norm[i], params.gamma))) {
        pool.push_back(i);
      }
    }
    if (static_cast<int>(pool.size()) < 2) {
      std::vector<int> order(b);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return *pop.members[x].fitness > *pop.members[y].fitness;
      });
      for (int k = 0; static_cast<int>(pool.size()) < 2; ++k) {
        if (std::find(pool.begin(), pool.end(), order[k]) == pool.end()) {
          pool.push_back(order[k]);
        }
      }
      std::sort(pool.begin(), pool.end());
    }

    {
      std::vector<Chromosome> parents;
      std::vector<double> parent_norm;
      for (int i : pool) {
        parents.push_back(pop.members[i]);
        parent_norm.push_back(norm[i]);
      }
      train_wheel(wheel, parents, parent_norm);
    }

    // Offspring pile: crossover children plus wheel mutants. Anything whose
    // gene set the run already holds evaluated is discarded or redrawn;
    // re-scoring a known gene set would burn budget without exploring or
    // exploiting anything.
    std::vector<Chromosome> offspring;
    const auto is_known = [&](const std::vector<int>& genes) {
      auto key = genes;
      std::sort(key.begin(), key.end());
      const auto matches = [&](const Chromosome& c) {
        auto other = c.genes;
        std::sort(other.begin(), other.end());
        return other == key;
      };
      return std::any_of(pop.members.begin(), pop.members.end(), matches) ||
             std::any_of(offspring.begin(), offspring.end(), matches);
    };

    // Disjoint random pairings over the pool; an odd member sits out.
    std::vector<int> shuffled = pool;
    rng.shuffle(shuffled);
    for (std::size_t k = 0; k + 1 < shuffled.size(); k += 2) {
      auto [c1, c2] = uniform_crossover(pop.members[shuffled[k]],
                                        pop.members[shuffled[k + 1]], wheel,
                                        rng);
      for (auto* child : {&c1, &c2}) {
        if (!is_known(child->genes)) offspring.push_back(std::move(*child));
      }
    }

    // Full-chromosome mutation spawns a wheel-drawn rival for each non-elite
    // member with probability Pm_i; the original stays in the merge and the
    // truncation decides. Children are exempt in their birth generation:
    // they carry no fitness yet, so Pm is undefined for them. Up to two
    // redraws steer mutants away from gene sets already in hand.
    const int elite = elite_index(pop, ev.best_chromosome());
    for (int i = 0; i < b; ++i) {
      if (i == elite) continue;
      if (!rng.bernoulli(mutation_probability(norm[i], params.delta)))
        continue;
      Chromosome mutant = mutate_full(pop.members[i], wheel, rng);
      for (int redraw = 0; redraw < 6 && is_known(mutant.genes); ++redraw) {
        mutant = mutate_full(pop.members[i], wheel, rng);
      }
      if (!is_known(mutant.genes)) offspring.push_back(std::move(mutant));
    }

    // A generation must evaluate something or the budget would never drain;
    // when every candidate collided with a known gene set, fall back to a
    // fresh uniform draw.
    if (offspring.empty()) {
      offspring.push_back(Chromosome{random_distinct_genes(m, n, rng), {}});
    }

    // (mu + lambda) replacement: merge, score the dirty, keep the top B,
    // preferring distinct gene sets so the population cannot silt up with
    // copies of one hypothesis.
    for (auto& c : offspring) pop.members.push_back(std::move(c));
    if (!evaluate_dirty(ev, pop.members)) break;
    sort_with_elite_first(pop.members, ev.best_chromosome());
    truncate_distinct_first(pop.members, b);
    ++pop.generation;
    if (observer) observer(pop);
    assert(elite_index(pop, ev.best_chromosome()) >= 0);
  }
  return ev.take_trace();
}

}  // namespace agsac
