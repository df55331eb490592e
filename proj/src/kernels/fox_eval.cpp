#include "hyperloc/kernels/fox_eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperloc::kernels {

namespace {

// powers[j][e - lo[j]] = t_j^e over the exponent range actually used.
struct PowerTable {
  std::vector<int> lo;
  std::vector<std::vector<RatFunc>> powers;

  PowerTable(const LaurentMatrix& m, const std::vector<RatFunc>& t) : lo(t.size(), 0), powers(t.size()) {
    std::vector<int> hi(t.size(), 0);
    for (const auto& row : m) {
      for (const auto& entry : row) {
        for (const auto& [e, c] : entry) {
          if (e.size() != t.size()) throw std::invalid_argument("Laurent exponent length mismatch");
          for (std::size_t j = 0; j < e.size(); ++j) {
            lo[j] = std::min(lo[j], e[j]);
            hi[j] = std::max(hi[j], e[j]);
          }
        }
      }
    }
    for (std::size_t j = 0; j < t.size(); ++j) {
      const RatFunc base = t[j].pow(lo[j]);
      powers[j].push_back(base);
      for (int e = lo[j] + 1; e <= hi[j]; ++e) powers[j].push_back(powers[j].back() * t[j]);
    }
  }

  RatFunc eval(const Laurent& p) const {
    RatFunc sum;
    for (const auto& [e, c] : p) {
      RatFunc term(c);
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] != 0) term *= powers[j][e[j] - lo[j]];
      }
      sum += term;
    }
    return sum;
  }
};

}  // namespace

ExactMatrix evaluate_serial(const LaurentMatrix& m, const std::vector<RatFunc>& t) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  PowerTable table(m, t);
  ExactMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = table.eval(m[i][j]);
  }
  return out;
}

ExactMatrix evaluate_omp(const LaurentMatrix& m, const std::vector<RatFunc>& t) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  PowerTable table(m, t);
  ExactMatrix out(rows, cols);
  const long long total = static_cast<long long>(rows * cols);
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < total; ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / cols;
    const std::size_t j = static_cast<std::size_t>(idx) % cols;
    out(i, j) = table.eval(m[i][j]);
  }
  return out;
}

}  // namespace hyperloc::kernels
