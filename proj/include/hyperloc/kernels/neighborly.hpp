#ifndef HYPERLOC_KERNELS_NEIGHBORLY_HPP
#define HYPERLOC_KERNELS_NEIGHBORLY_HPP

#include <cstdint>
#include <vector>

namespace hyperloc::kernels {

/// Set-partition search over {0..n-1} subject to: for every block B and every
/// constraint set X, |X \ B| <= 1 implies X is contained in B.
struct PartitionProblem {
  int n = 0;
  std::vector<std::vector<int>> constraints;
};

struct PartitionSearchResult {
  /// Block label of each element, as a restricted growth string over
  /// 0..n-1; only partitions other than one block and all singletons.
  std::vector<std::vector<int>> labelings;
  std::uint64_t nodes = 0;
  /// False when the node budget ran out before the tree was exhausted.
  bool complete = true;
};

// Depth-first restricted-growth-string search with exact pruning. The
// OpenMP version splits the tree at a fixed prefix depth and merges in
// prefix order, so both return identical results when neither runs out of
// budget.
PartitionSearchResult neighborly_search_serial(const PartitionProblem& p, std::uint64_t node_budget);
PartitionSearchResult neighborly_search_omp(const PartitionProblem& p, std::uint64_t node_budget);

}  // namespace hyperloc::kernels

#endif  // HYPERLOC_KERNELS_NEIGHBORLY_HPP
