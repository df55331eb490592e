#ifndef HYPERLOC_OS_ALGEBRA_HPP
#define HYPERLOC_OS_ALGEBRA_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperloc/arrangement.hpp"
#include "hyperloc/ratfunc.hpp"

namespace hyperloc {

class SizeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Orlik-Solomon algebra through degree 2, with the hyperplane list order
/// as the linear order for broken circuits.
class OSBasis {
 public:
  explicit OSBasis(const Arrangement& a);

  std::size_t degree1() const { return n_; }
  std::size_t degree2() const { return pairs_.size(); }
  /// NBC pairs (i < j), the degree-2 basis.
  const std::vector<std::pair<int, int>>& nbc_pairs() const { return pairs_; }

  /// e_i e_j in NBC coordinates, as (basis index, coefficient) pairs.
  std::vector<std::pair<std::size_t, int>> product(int i, int j) const;

  /// Degree-2 element a * b for degree-1 elements given by coordinates.
  std::vector<RatFunc> wedge(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) const;

 private:
  std::size_t n_;
  std::vector<std::pair<int, int>> pairs_;
  // For each unordered pair: the minimal element of its rank-2 flat, or -1
  // when the hyperplanes do not meet.
  std::vector<std::vector<int>> flat_min_;
  std::vector<std::vector<std::ptrdiff_t>> pair_index_;
};

/// Weight vector lambda, one coordinate per hyperplane.
using Weight = std::vector<RatFunc>;

/// Set partition of the hyperplane indices: sorted blocks of sorted indices.
using Partition = std::vector<std::vector<int>>;

/// dim H^1 of the Aomoto complex (A, a_lambda wedge).
std::size_t aomoto_h1_dim(const Arrangement& a, const Weight& lambda);

/// aomoto_h1_dim(a, lambda) >= m.
bool resonance_membership(const Arrangement& a, const Weight& lambda, int m);

struct LocalComponent {
  Flat flat;
  int dimension;
};

/// One component {support in X, coordinate sum 0} per multiple point X.
std::vector<LocalComponent> local_components(const Arrangement& a);

struct NeighborlyOptions {
  /// Largest arrangement searched with a completeness guarantee.
  std::size_t max_exhaustive = 14;
  /// Above max_exhaustive, search anyway under node_budget instead of
  /// raising SizeBoundError.
  bool allow_pruned = false;
  std::uint64_t node_budget = 2'000'000'000ULL;
  bool parallel = true;
};

struct NeighborlyResult {
  std::vector<Partition> partitions;
  /// The search tree was fully explored.
  bool complete = true;
  /// The run was within max_exhaustive (as opposed to the pruned mode).
  bool exhaustive = true;
  std::uint64_t nodes = 0;
};

/// Non-trivial partitions such that, for every block B and every rank-2
/// flat X, |X \ B| <= 1 implies X is contained in B. A double point thus
/// always lies inside one block.
NeighborlyResult neighborly_partitions(const Arrangement& a, const NeighborlyOptions& opts = {});

/// True if the partition satisfies the neighborly condition.
bool is_neighborly(const Arrangement& a, const Partition& p);

struct EssentialResonanceVerdict {
  bool exists = false;
  /// "neighborly-partition", "local-component", or "none".
  std::string rule;
  /// The partition search was complete, so a negative verdict is proved.
  bool complete = true;
  NeighborlyResult search;
};

/// Decides whether R^1(A) has an essential component: either a non-trivial
/// neighborly partition exists, or a local component is supported on every
/// hyperplane.
EssentialResonanceVerdict essential_resonance_exists(const Arrangement& a,
                                                     const NeighborlyOptions& opts = {});

}  // namespace hyperloc

#endif  // HYPERLOC_OS_ALGEBRA_HPP
