#include "hyperloc/kernels/bareiss.hpp"

#include <utility>

namespace hyperloc::kernels {

namespace {

// Pivot choice: the nonzero entry of smallest total size in the leading
// remaining column that has one; keeps intermediate growth down.
bool find_pivot(const PolyMatrix& m, std::size_t k, std::size_t& pr, std::size_t& pc) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t j = k; j < cols; ++j) {
    bool found = false;
    std::size_t best = 0;
    for (std::size_t i = k; i < rows; ++i) {
      if (m[i][j].is_zero()) continue;
      std::size_t size = m[i][j].terms().size();
      if (!found || size < best) {
        found = true;
        best = size;
        pr = i;
        pc = j;
      }
    }
    if (found) return true;
  }
  return false;
}

void swap_into_place(PolyMatrix& m, std::size_t k, std::size_t pr, std::size_t pc) {
  if (pr != k) std::swap(m[pr], m[k]);
  if (pc != k) {
    for (auto& row : m) std::swap(row[pc], row[k]);
  }
}

Poly update(const Poly& pivot, const Poly& a_ij, const Poly& a_ik, const Poly& a_kj,
            const Poly& prev) {
  Poly num = pivot * a_ij - a_ik * a_kj;
  if (prev.is_constant() && prev.constant_term().is_one()) return num;
  auto q = exact_divide(num, prev);
  if (!q) throw ArithmeticError("Bareiss step: inexact division");
  return *q;
}

}  // namespace

std::size_t bareiss_rank_serial(PolyMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Poly prev(1);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < rows && k < cols; ++k) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(m, k, pr, pc)) break;
    swap_into_place(m, k, pr, pc);
    ++rank;
    const Poly pivot = m[k][k];
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        m[i][j] = update(pivot, m[i][j], m[i][k], m[k][j], prev);
      }
      m[i][k] = Poly();
    }
    prev = pivot;
  }
  return rank;
}

std::size_t bareiss_rank_omp(PolyMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Poly prev(1);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < rows && k < cols; ++k) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(m, k, pr, pc)) break;
    swap_into_place(m, k, pr, pc);
    ++rank;
    const Poly pivot = m[k][k];
    const long long first = static_cast<long long>(k) + 1;
    const long long last = static_cast<long long>(rows);
    // Rows below the pivot are independent of each other.
#pragma omp parallel for schedule(dynamic)
    for (long long i = first; i < last; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      for (std::size_t j = k + 1; j < cols; ++j) {
        row[j] = update(pivot, row[j], row[k], m[k][j], prev);
      }
      row[k] = Poly();
    }
    prev = pivot;
  }
  return rank;
}

}  // namespace hyperloc::kernels
