#pragma once

#include <utility>
#include <vector>

#include "agsac/chromosome.hpp"
#include "agsac/rng.hpp"
#include "agsac/wheel.hpp"

namespace agsac {

// Min-max rescaling of the fitnesses of one generation. When every fitness is
// equal the whole vector maps to 0: a rank-free population carries no
// exploitation signal, so selection falls back to pure exploration.
std::vector<double> normalize_fitness(const std::vector<int>& fitnesses);

// Pc = norm^gamma. Nondecreasing in norm, Pc(0) = 0, Pc(1) = 1.
double crossover_probability(double norm_fitness, double gamma);

// Pm = exp(-norm / delta). Strictly decreasing in norm, Pm(0) = 1.
double mutation_probability(double norm_fitness, double delta);

// Uniform crossover: per position, child1 takes a's or b's gene with equal
// probability and child2 takes the other. Duplicate genes inside a child are
// repaired by resampling from the wheel, excluding genes the child already
// carries. Children are dirty.
std::pair<Chromosome, Chromosome> uniform_crossover(const Chromosome& a,
                                                    const Chromosome& b,
                                                    const RouletteWheel& wheel,
                                                    Rng& rng);

// Deterministic core of uniform_crossover: take_first[i] == true routes
// a.genes[i] to child1. Exposed for direct exercise of the repair path.
std::pair<Chromosome, Chromosome> crossover_with_mask(
    const Chromosome& a, const Chromosome& b,
    const std::vector<bool>& take_first, const RouletteWheel& wheel, Rng& rng);

// Replaces every gene: m draws from the wheel without replacement
// (sequential, renormalizing over the remaining indices). Result is dirty.
Chromosome mutate_full(const Chromosome& c, const RouletteWheel& wheel,
                       Rng& rng);

// Per-gene mutation of the GASAC baseline: each gene independently mutates
// with probability per_gene_probability to an index drawn uniformly from the
// values not held by the other genes. Returns how many gene slots fired.
int mutate_genes_uniform(Chromosome& c, int n, double per_gene_probability,
                         Rng& rng);

// m distinct indices drawn uniformly from [0, n).
std::vector<int> random_distinct_genes(int m, int n, Rng& rng);

// Uniform draw from [0, n) excluding the given values.
int uniform_excluding(int n, std::vector<int> excluded, Rng& rng);

}  // namespace agsac
