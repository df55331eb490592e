#include "hyperloc/kernels/neighborly.hpp"

#include <algorithm>
#include <map>

namespace hyperloc::kernels {

namespace {

// Elements are visited in an order that closes constraint sets early: start
// with the largest set, then repeatedly take the element sharing the most
// sets with those already placed.
std::vector<int> visit_order(const PartitionProblem& p) {
  std::vector<int> order;
  std::vector<char> placed(p.n, 0);
  std::vector<int> weight(p.n, 0);
  std::vector<std::vector<int>> member_of(p.n);
  for (int c = 0; c < static_cast<int>(p.constraints.size()); ++c) {
    for (int e : p.constraints[c]) member_of[e].push_back(c);
  }
  while (static_cast<int>(order.size()) < p.n) {
    int best = -1;
    for (int e = 0; e < p.n; ++e) {
      if (placed[e]) continue;
      if (best < 0 || weight[e] > weight[best] ||
          (weight[e] == weight[best] && member_of[e].size() > member_of[best].size())) {
        best = e;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (int c : member_of[best]) {
      for (int e : p.constraints[c]) weight[e] += 1;
    }
  }
  return order;
}

class Searcher {
 public:
  Searcher(const PartitionProblem& p, std::vector<int> order)
      : p_(p), order_(std::move(order)), label_(p.n, -1), member_of_(p.n) {
    for (int c = 0; c < static_cast<int>(p.constraints.size()); ++c) {
      for (int e : p.constraints[c]) member_of_[e].push_back(c);
    }
  }

  // Assigns order_[0..prefix.size()) from `prefix`; false if that already
  // violates a constraint.
  bool seed(const std::vector<int>& prefix) {
    blocks_ = 0;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      label_[order_[k]] = prefix[k];
      blocks_ = std::max(blocks_, prefix[k] + 1);
      if (violated(order_[k])) return false;
    }
    depth_ = prefix.size();
    return true;
  }

  void run(std::uint64_t budget, PartitionSearchResult& out) {
    budget_ = budget;
    out_ = &out;
    dfs(depth_);
  }

  // All valid prefixes of the given length, in lexicographic order. Returns
  // the number of shorter partial assignments visited on the way.
  std::uint64_t prefixes(std::size_t length, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    interior_ = 0;
    collect(0, length, cur, out);
    return interior_;
  }

 private:
  const PartitionProblem& p_;
  std::vector<int> order_;
  std::vector<int> label_;
  std::vector<std::vector<int>> member_of_;
  int blocks_ = 0;
  std::size_t depth_ = 0;
  std::uint64_t budget_ = 0;
  PartitionSearchResult* out_ = nullptr;
  std::uint64_t interior_ = 0;

  // Checks every constraint through e. A block holding all but at most one
  // element of X, while some element of X already sits elsewhere, can never
  // be repaired by later assignments.
  bool violated(int e) const {
    for (int c : member_of_[e]) {
      const auto& x = p_.constraints[c];
      const int size = static_cast<int>(x.size());
      int assigned = 0;
      std::map<int, int> count;
      for (int y : x) {
        if (label_[y] < 0) continue;
        ++assigned;
        ++count[label_[y]];
      }
      for (const auto& [b, a] : count) {
        if (a >= size - 1 && assigned > a) return true;
      }
    }
    return false;
  }

  void collect(std::size_t k, std::size_t length, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if (k == length || k == order_.size()) {
      out.push_back(cur);
      return;
    }
    ++interior_;
    const int e = order_[k];
    for (int b = 0; b <= blocks_; ++b) {
      const int saved = blocks_;
      label_[e] = b;
      if (b == blocks_) ++blocks_;
      if (!violated(e)) {
        cur.push_back(b);
        collect(k + 1, length, cur, out);
        cur.pop_back();
      }
      blocks_ = saved;
      label_[e] = -1;
    }
  }

  void dfs(std::size_t k) {
    if (!out_->complete) return;
    if (out_->nodes >= budget_) {
      out_->complete = false;
      return;
    }
    ++out_->nodes;
    if (k == order_.size()) {
      if (blocks_ > 1 && blocks_ < p_.n) out_->labelings.push_back(canonical());
      return;
    }
    const int e = order_[k];
    for (int b = 0; b <= blocks_; ++b) {
      const int saved = blocks_;
      label_[e] = b;
      if (b == blocks_) ++blocks_;
      if (!violated(e)) dfs(k + 1);
      blocks_ = saved;
      label_[e] = -1;
      if (!out_->complete) return;
    }
  }

  // Relabels blocks by first occurrence in index order.
  std::vector<int> canonical() const {
    std::vector<int> map(p_.n, -1);
    std::vector<int> out(p_.n);
    int next = 0;
    for (int e = 0; e < p_.n; ++e) {
      int& m = map[label_[e]];
      if (m < 0) m = next++;
      out[e] = m;
    }
    return out;
  }
};

void finish(PartitionSearchResult& r) {
  std::sort(r.labelings.begin(), r.labelings.end());
}

}  // namespace

PartitionSearchResult neighborly_search_serial(const PartitionProblem& p, std::uint64_t node_budget) {
  PartitionSearchResult r;
  if (p.n == 0) return r;
  Searcher s(p, visit_order(p));
  s.seed({});
  s.run(node_budget, r);
  finish(r);
  return r;
}

PartitionSearchResult neighborly_search_omp(const PartitionProblem& p, std::uint64_t node_budget) {
  PartitionSearchResult r;
  if (p.n == 0) return r;
  const auto order = visit_order(p);
  std::vector<std::vector<int>> prefixes;
  const std::size_t depth = std::min<std::size_t>(p.n, 6);
  r.nodes = Searcher(p, order).prefixes(depth, prefixes);
  const long long count = static_cast<long long>(prefixes.size());
  if (count == 0) return r;
  std::vector<PartitionSearchResult> parts(prefixes.size());
  // Each prefix gets an equal share, which keeps budgeted runs deterministic.
  const std::uint64_t share = std::max<std::uint64_t>(1, node_budget / prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    Searcher s(p, order);
    s.seed(prefixes[i]);
    s.run(share, parts[i]);
  }
  for (auto& part : parts) {
    r.nodes += part.nodes;
    r.complete = r.complete && part.complete;
    r.labelings.insert(r.labelings.end(), part.labelings.begin(), part.labelings.end());
  }
  finish(r);
  return r;
}

}  // namespace hyperloc::kernels
