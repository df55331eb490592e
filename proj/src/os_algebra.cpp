#include "hyperloc/os_algebra.hpp"

#include <algorithm>

#include "hyperloc/kernels/neighborly.hpp"
#include "hyperloc/matrix.hpp"

namespace hyperloc {

OSBasis::OSBasis(const Arrangement& a)
    : n_(a.size()),
      flat_min_(a.size(), std::vector<int>(a.size(), -1)),
      pair_index_(a.size(), std::vector<std::ptrdiff_t>(a.size(), -1)) {
  for (const Flat& x : a.flats_of_rank(2)) {
    const int m = x.indices.front();
    for (std::size_t s = 0; s < x.indices.size(); ++s) {
      for (std::size_t t = s + 1; t < x.indices.size(); ++t) {
        flat_min_[x.indices[s]][x.indices[t]] = m;
        flat_min_[x.indices[t]][x.indices[s]] = m;
      }
    }
    // Pairs avoiding the broken circuit X \ {min X} are those through min X.
    for (std::size_t t = 1; t < x.indices.size(); ++t) pairs_.emplace_back(m, x.indices[t]);
  }
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    pair_index_[pairs_[k].first][pairs_[k].second] = static_cast<std::ptrdiff_t>(k);
  }
}

std::vector<std::pair<std::size_t, int>> OSBasis::product(int i, int j) const {
  if (i == j) return {};
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  const int m = flat_min_[i][j];
  if (m < 0) return {};  // parallel: e_i e_j = 0
  // With f_k = e_m e_k and f_m = 0, the relation at X reads e_i e_j = f_j - f_i.
  std::vector<std::pair<std::size_t, int>> out;
  out.emplace_back(static_cast<std::size_t>(pair_index_[m][j]), sign);
  if (i != m) out.emplace_back(static_cast<std::size_t>(pair_index_[m][i]), -sign);
  return out;
}

std::vector<RatFunc> OSBasis::wedge(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) const {
  std::vector<RatFunc> out(pairs_.size());
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j || b[j].is_zero()) continue;
      const RatFunc c = a[i] * b[j];
      for (auto [k, s] : product(static_cast<int>(i), static_cast<int>(j))) {
        out[k] += s > 0 ? c : -c;
      }
    }
  }
  return out;
}

std::size_t aomoto_h1_dim(const Arrangement& a, const Weight& lambda) {
  const std::size_t n = a.size();
  if (lambda.size() != n) {
    throw std::invalid_argument("weight has " + std::to_string(lambda.size()) + " coordinates, expected " +
                                std::to_string(n));
  }
  const bool nonzero = std::any_of(lambda.begin(), lambda.end(), [](const RatFunc& x) { return !x.is_zero(); });
  if (!nonzero) return n;
  OSBasis os(a);
  // Row j is a_lambda * e_j.
  ExactMatrix m(n, os.degree2());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || lambda[i].is_zero()) continue;
      for (auto [k, s] : os.product(static_cast<int>(i), static_cast<int>(j))) {
        m(j, k) += s > 0 ? lambda[i] : -lambda[i];
      }
    }
  }
  return n - rank_ff(m) - 1;
}

bool resonance_membership(const Arrangement& a, const Weight& lambda, int m) {
  if (m < 1) throw std::invalid_argument("resonance depth must be at least 1");
  return aomoto_h1_dim(a, lambda) >= static_cast<std::size_t>(m);
}

std::vector<LocalComponent> local_components(const Arrangement& a) {
  std::vector<LocalComponent> out;
  for (const Flat& x : a.multiple_points()) {
    out.push_back(LocalComponent{x, static_cast<int>(x.indices.size()) - 1});
  }
  return out;
}

namespace {

kernels::PartitionProblem partition_problem(const Arrangement& a) {
  kernels::PartitionProblem p;
  p.n = static_cast<int>(a.size());
  for (const Flat& x : a.flats_of_rank(2)) p.constraints.push_back(x.indices);
  return p;
}

Partition blocks_of(const std::vector<int>& labels) {
  Partition out;
  for (std::size_t e = 0; e < labels.size(); ++e) {
    if (static_cast<std::size_t>(labels[e]) >= out.size()) out.resize(labels[e] + 1);
    out[labels[e]].push_back(static_cast<int>(e));
  }
  return out;
}

}  // namespace

NeighborlyResult neighborly_partitions(const Arrangement& a, const NeighborlyOptions& opts) {
  NeighborlyResult out;
  out.exhaustive = a.size() <= opts.max_exhaustive;
  if (!out.exhaustive && !opts.allow_pruned) {
    throw SizeBoundError("neighborly partition search: " + std::to_string(a.size()) +
                         " hyperplanes exceeds the exhaustive bound " +
                         std::to_string(opts.max_exhaustive));
  }
  // Within the exhaustive bound the budget is not applied.
  const std::uint64_t budget = out.exhaustive ? UINT64_MAX : opts.node_budget;
  const auto problem = partition_problem(a);
  const auto r = opts.parallel ? kernels::neighborly_search_omp(problem, budget)
                               : kernels::neighborly_search_serial(problem, budget);
  out.complete = r.complete;
  out.nodes = r.nodes;
  for (const auto& labels : r.labelings) out.partitions.push_back(blocks_of(labels));
  std::sort(out.partitions.begin(), out.partitions.end());
  return out;
}

bool is_neighborly(const Arrangement& a, const Partition& p) {
  std::vector<int> block(a.size(), -1);
  for (std::size_t b = 0; b < p.size(); ++b) {
    for (int e : p[b]) {
      if (e < 0 || static_cast<std::size_t>(e) >= a.size() || block[e] >= 0) {
        throw std::invalid_argument("not a partition of the hyperplanes");
      }
      block[e] = static_cast<int>(b);
    }
  }
  if (std::count(block.begin(), block.end(), -1) > 0) {
    throw std::invalid_argument("partition does not cover every hyperplane");
  }
  for (const Flat& x : a.flats_of_rank(2)) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      std::size_t outside = 0;
      for (int e : x.indices) outside += block[e] != static_cast<int>(b);
      if (outside == 1) return false;
    }
  }
  return true;
}

EssentialResonanceVerdict essential_resonance_exists(const Arrangement& a, const NeighborlyOptions& opts) {
  EssentialResonanceVerdict v;
  for (const auto& c : local_components(a)) {
    if (c.flat.indices.size() == a.size()) {
      v.exists = true;
      v.rule = "local-component";
      return v;
    }
  }
  v.search = neighborly_partitions(a, opts);
  v.complete = v.search.complete;
  if (!v.search.partitions.empty()) {
    v.exists = true;
    v.rule = "neighborly-partition";
  } else {
    v.rule = "none";
  }
  return v;
}

}  // namespace hyperloc
