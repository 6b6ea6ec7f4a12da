#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "agsac/operators.hpp"
#include "doctest.h"

using namespace agsac;

TEST_CASE("normalize_fitness rescales to the unit interval") {
  CHECK(normalize_fitness({10, 20, 30}) ==
        std::vector<double>{0.0, 0.5, 1.0});
  CHECK(normalize_fitness({7, 7, 7}) == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(normalize_fitness({0, 100}) == std::vector<double>{0.0, 1.0});
  CHECK_THROWS_AS(normalize_fitness({}), std::invalid_argument);
}

TEST_CASE("crossover probability endpoints and spot values") {
  for (double gamma : {1.0, 2.0, 3.0, 5.0, 10.0}) {
    CHECK(crossover_probability(1.0, gamma) == 1.0);
    CHECK(crossover_probability(0.0, gamma) == 0.0);
  }
  CHECK(crossover_probability(0.5, 2.0) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("mutation probability endpoints and spot values") {
  for (double delta : {1.0, 0.5, 0.2, 0.1, 0.05}) {
    CHECK(mutation_probability(0.0, delta) == 1.0);
  }
  CHECK(mutation_probability(1.0, 0.2) ==
        doctest::Approx(0.0067379469990854671).epsilon(1e-12));
  CHECK(mutation_probability(0.5, 1.0) ==
        doctest::Approx(0.60653065971263342).epsilon(1e-12));
}

TEST_CASE("selection curves are monotone with pinned endpoints") {
  Rng rng(5);
  for (double gamma : {1.0, 2.0, 3.0, 5.0, 10.0}) {
    for (double delta : {1.0, 0.5, 0.2, 0.1, 0.05}) {
      for (int i = 0; i < 200; ++i) {
        double x = rng.uniform01();
        double y = rng.uniform01();
        if (x > y) std::swap(x, y);
        CHECK(crossover_probability(x, gamma) <=
              crossover_probability(y, gamma));
        if (x < y) {
          CHECK(mutation_probability(x, delta) >
                mutation_probability(y, delta));
        }
      }
    }
  }
}

TEST_CASE("crossover routes genes by the mask") {
  const Chromosome a{{1, 2, 3, 4}, {}};
  const Chromosome b{{5, 6, 7, 8}, {}};
  const RouletteWheel wheel(10);
  Rng rng(1);
  const auto [c1, c2] =
      crossover_with_mask(a, b, {true, false, true, false}, wheel, rng);
  CHECK(c1.genes == std::vector<int>{1, 6, 3, 8});
  CHECK(c2.genes == std::vector<int>{5, 2, 7, 4});
  CHECK(c1.dirty());
  CHECK(c2.dirty());
}

TEST_CASE("crossover of identical parents is a fixed point") {
  const Chromosome a{{1, 2, 3, 4}, {}};
  const RouletteWheel wheel(10);
  Rng rng(2);
  const auto [c1, c2] = uniform_crossover(a, a, wheel, rng);
  CHECK(c1.genes == a.genes);
  CHECK(c2.genes == a.genes);
}

TEST_CASE("crossover repairs duplicate genes from the wheel") {
  const Chromosome a{{3, 2, 9, 4}, {}};
  const Chromosome b{{5, 3, 7, 8}, {}};
  const RouletteWheel wheel(10);

  std::map<int, int> replacement_freq;
  const int trials = 4000;
  for (int t = 0; t < trials; ++t) {
    Rng rng(1000 + t);
    const auto [c1, c2] =
        crossover_with_mask(a, b, {true, false, true, true}, wheel, rng);
    // Draft child1 is (3, 3, 9, 4); the second slot must be resampled away
    // from {3, 9, 4}.
    CHECK(c1.genes[0] == 3);
    CHECK(c1.genes[2] == 9);
    CHECK(c1.genes[3] == 4);
    const int r = c1.genes[1];
    CHECK(r != 3);
    CHECK(r != 9);
    CHECK(r != 4);
    ++replacement_freq[r];
    CHECK(c2.genes == std::vector<int>{5, 2, 7, 8});

    const std::set<int> distinct1(c1.genes.begin(), c1.genes.end());
    CHECK(distinct1.size() == c1.genes.size());
  }
  // Uniform wheel: the seven admissible values should each show up at a
  // roughly uniform rate.
  CHECK(replacement_freq.size() == 7);
  for (const auto& [value, count] : replacement_freq) {
    CHECK(count > trials / 7 / 2);
    CHECK(count < trials / 7 * 2);
  }
}

TEST_CASE("uniform crossover flips a fair per-position coin") {
  const Chromosome a{{0, 1, 2, 3}, {}};
  const Chromosome b{{4, 5, 6, 7}, {}};
  const RouletteWheel wheel(8);
  Rng rng(77);
  int from_a = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const auto [c1, c2] = uniform_crossover(a, b, wheel, rng);
    for (std::size_t i = 0; i < 4; ++i) {
      const bool took_a = c1.genes[i] == a.genes[i];
      CHECK((took_a || c1.genes[i] == b.genes[i]));
      CHECK(c2.genes[i] == (took_a ? b.genes[i] : a.genes[i]));
      from_a += took_a;
    }
  }
  const double rate = double(from_a) / (4.0 * trials);
  CHECK(rate > 0.49);
  CHECK(rate < 0.51);
}

TEST_CASE("mutate_full draws a uniform sample under a uniform wheel") {
  // n = 8, m = 4: the 70 possible gene sets should be equally likely.
  const RouletteWheel wheel(8);
  const Chromosome base{{0, 1, 2, 3}, {}};
  Rng rng(99);
  std::map<std::vector<int>, int> counts;
  const int draws = 10000;
  for (int t = 0; t < draws; ++t) {
    const auto mutated = mutate_full(base, wheel, rng);
    CHECK(mutated.dirty());
    auto key = mutated.genes;
    std::sort(key.begin(), key.end());
    CHECK(std::adjacent_find(key.begin(), key.end()) == key.end());
    ++counts[key];
  }
  CHECK(counts.size() == 70);
  const double expected = draws / 70.0;
  double chi2 = 0.0;
  for (const auto& [subset, count] : counts) {
    chi2 += (count - expected) * (count - expected) / expected;
  }
  // 99th percentile of chi-square with 69 degrees of freedom.
  CHECK(chi2 < 99.22751547056947);
}

TEST_CASE("mutate_full follows heavily skewed wheel weights") {
  RouletteWheel wheel(10);
  for (int g = 0; g < 4; ++g) wheel.reinforce(g, 1e9 - 1.0);
  const Chromosome base{{5, 6, 7, 8}, {}};
  Rng rng(7);
  int hits = 0;
  const int draws = 10000;
  for (int t = 0; t < draws; ++t) {
    auto genes = mutate_full(base, wheel, rng).genes;
    std::sort(genes.begin(), genes.end());
    hits += genes == std::vector<int>{0, 1, 2, 3};
  }
  CHECK(double(hits) / draws > 0.99);
}

TEST_CASE("mutate_full with n == m is forced to the full index set") {
  RouletteWheel wheel(4);
  wheel.reinforce(2, 5.0);  // arbitrary skew must not matter
  const Chromosome base{{0, 1, 2, 3}, {}};
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    auto genes = mutate_full(base, wheel, rng).genes;
    std::sort(genes.begin(), genes.end());
    CHECK(genes == std::vector<int>{0, 1, 2, 3});
  }
}

TEST_CASE("train_wheel accumulates normalized fitness per gene") {
  RouletteWheel wheel(5);
  train_wheel(wheel, {Chromosome{{0, 1, 2, 3}, {}}}, {1.0});
  for (int g = 0; g < 4; ++g) CHECK(wheel.weight(g) == 2.0);
  CHECK(wheel.weight(4) == 1.0);
  CHECK(wheel.selection_probability(4) == doctest::Approx(1.0 / 9.0));

  // Zero increment leaves the wheel unchanged.
  train_wheel(wheel, {Chromosome{{0, 4, 2, 3}, {}}}, {0.0});
  CHECK(wheel.weight(4) == 1.0);

  // Shared genes accumulate across parents.
  RouletteWheel w2(6);
  train_wheel(w2,
              {Chromosome{{0, 1, 2, 3}, {}}, Chromosome{{2, 4, 5, 1}, {}}},
              {1.0, 0.5});
  CHECK(w2.weight(2) == doctest::Approx(2.5));
}

TEST_CASE("training shifts selection probability toward parent genes") {
  RouletteWheel wheel(20);
  std::vector<double> before(20);
  for (int g = 0; g < 20; ++g) before[g] = wheel.selection_probability(g);

  const Chromosome parent{{4, 9, 13, 17}, {}};
  train_wheel(wheel, {parent}, {0.8});
  for (int g = 0; g < 20; ++g) {
    const bool in_parent =
        std::find(parent.genes.begin(), parent.genes.end(), g) !=
        parent.genes.end();
    if (in_parent) {
      CHECK(wheel.selection_probability(g) > before[g]);
    } else {
      CHECK(wheel.selection_probability(g) < before[g]);
    }
  }
}

TEST_CASE("wheel sampling respects exclusions and weights") {
  RouletteWheel wheel(6);
  wheel.reinforce(0, 9.0);  // weight 10 vs 1 elsewhere
  Rng rng(13);
  int zeros = 0;
  const std::vector<int> excluded = {1, 2};
  for (int t = 0; t < 5000; ++t) {
    const int g = wheel.sample(rng, excluded);
    CHECK(g != 1);
    CHECK(g != 2);
    zeros += g == 0;
  }
  // P(0) = 10/13 among {0, 3, 4, 5}.
  CHECK(double(zeros) / 5000 == doctest::Approx(10.0 / 13.0).epsilon(0.05));
}

TEST_CASE("uniform_excluding draws from the complement") {
  Rng rng(17);
  std::map<int, int> freq;
  for (int t = 0; t < 3000; ++t) {
    const int v = uniform_excluding(5, {1, 3}, rng);
    CHECK((v == 0 || v == 2 || v == 4));
    ++freq[v];
  }
  for (const auto& [v, count] : freq) CHECK(count > 800);
}

TEST_CASE("per-gene mutation keeps genes distinct and drops stale fitness") {
  Rng rng(23);
  for (int t = 0; t < 2000; ++t) {
    Chromosome c{{0, 5, 9, 14}, 42};
    const int fired = mutate_genes_uniform(c, 20, 0.5, rng);
    const std::set<int> distinct(c.genes.begin(), c.genes.end());
    CHECK(distinct.size() == 4);
    if (fired > 0) {
      CHECK(c.dirty());
    } else {
      CHECK(*c.fitness == 42);
    }
  }
  Chromosome c{{0, 1}, 7};
  CHECK(mutate_genes_uniform(c, 10, 0.0, rng) == 0);
  CHECK_FALSE(c.dirty());
}

TEST_CASE("random_distinct_genes samples valid chromosomes") {
  Rng rng(29);
  for (int t = 0; t < 1000; ++t) {
    const auto genes = random_distinct_genes(4, 9, rng);
    CHECK(genes.size() == 4);
    std::set<int> distinct(genes.begin(), genes.end());
    CHECK(distinct.size() == 4);
    for (int g : genes) {
      CHECK(g >= 0);
      CHECK(g < 9);
    }
  }
}
