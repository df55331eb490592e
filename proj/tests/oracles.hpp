#ifndef HYPERLOC_TESTS_ORACLES_HPP
#define HYPERLOC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "hyperloc/arrangement.hpp"

namespace oracle {

using hyperloc::Arrangement;
using hyperloc::Cyclotomic;

// Plain Gauss-Jordan rank over the cyclotomic field.
inline std::size_t rank(std::vector<std::vector<Cyclotomic>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Cyclotomic inv = m[r][c].inverse();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Cyclotomic f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

struct SubsetRank {
  std::size_t normals;
  std::size_t augmented;
  bool consistent() const { return normals == augmented; }
};

inline SubsetRank subset_rank(const Arrangement& a, const std::vector<int>& s) {
  std::vector<std::vector<Cyclotomic>> n, aug;
  for (int i : s) {
    n.push_back(a[i].normal);
    aug.push_back(a[i].normal);
    aug.back().push_back(a[i].constant);
  }
  return {rank(n), rank(aug)};
}

inline std::vector<int> members(std::uint64_t mask, std::size_t n) {
  std::vector<int> s;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1U) s.push_back(static_cast<int>(i));
  }
  return s;
}

// Whitney's formula: pi(t) = sum over subsets with non-empty intersection of
// (-1)^{|S|} (-t)^{rank S}.
inline std::vector<long long> whitney_poincare(const Arrangement& a) {
  const std::size_t n = a.size();
  std::vector<long long> pi(a.ambient_dim() + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto s = members(mask, n);
    const auto r = subset_rank(a, s);
    if (!r.consistent()) continue;
    const long long sign = ((s.size() + r.normals) % 2 == 0) ? 1 : -1;
    pi[r.normals] += sign;
  }
  while (pi.size() > 1 && pi.back() == 0) pi.pop_back();
  return pi;
}

// Every flat as the closure of a consistent subset.
inline std::set<std::pair<int, std::vector<int>>> brute_flats(const Arrangement& a) {
  const std::size_t n = a.size();
  std::set<std::pair<int, std::vector<int>>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    auto s = members(mask, n);
    const auto r = subset_rank(a, s);
    if (!r.consistent()) continue;
    std::vector<int> closure;
    for (std::size_t h = 0; h < n; ++h) {
      auto t = s;
      t.push_back(static_cast<int>(h));
      const auto rt = subset_rank(a, t);
      if (rt.consistent() && rt.normals == r.normals) closure.push_back(static_cast<int>(h));
    }
    out.emplace(static_cast<int>(r.normals), closure);
  }
  return out;
}

// All set partitions of {0..n-1} as restricted growth strings.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      f(a);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    f(a);
    return;
  }
  a[0] = 0;
  rec(1, 1);
}

inline std::vector<std::vector<int>> blocks_of(const std::vector<int>& rgs) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (static_cast<std::size_t>(rgs[i]) >= out.size()) out.resize(rgs[i] + 1);
    out[rgs[i]].push_back(static_cast<int>(i));
  }
  return out;
}

// Non-trivial neighborly partitions by direct enumeration, from the rank-2
// flats computed by brute force.
inline std::vector<std::vector<std::vector<int>>> brute_neighborly(const Arrangement& a) {
  std::vector<std::vector<int>> lines;
  for (const auto& [rk, f] : brute_flats(a)) {
    if (rk == 2) lines.push_back(f);
  }
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<std::vector<int>>> out;
  for_each_partition(n, [&](const std::vector<int>& rgs) {
    const int nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (nb == 1 || nb == n) return;
    for (const auto& x : lines) {
      for (int b = 0; b < nb; ++b) {
        const auto outside = std::count_if(x.begin(), x.end(), [&](int i) { return rgs[i] != b; });
        if (outside == 1) return;
      }
    }
    out.push_back(blocks_of(rgs));
  });
  return out;
}

}  // namespace oracle

#endif  // HYPERLOC_TESTS_ORACLES_HPP
