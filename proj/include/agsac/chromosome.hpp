#pragma once

#include <optional>
#include <vector>

namespace agsac {

// A hypothesis: m pairwise-distinct dataset indices. The cached fitness is
// the H-inlier count of the model fit from the genes; it is dropped whenever
// the genes change, so dirty() marks chromosomes awaiting evaluation.
struct Chromosome {
  std::vector<int> genes;
  std::optional<int> fitness;

  bool dirty() const { return !fitness.has_value(); }

  friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

struct Population {
  std::vector<Chromosome> members;
  int generation = 0;
};

}  // namespace agsac
