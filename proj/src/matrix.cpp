#include "hyperloc/matrix.hpp"

#include "hyperloc/kernels/bareiss.hpp"

namespace hyperloc {

PolyMatrix clear_denominators(const ExactMatrix& m) {
  PolyMatrix out(m.rows(), std::vector<Poly>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Poly l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly& d = m(i, j).den();
      if (d.is_constant()) continue;
      Poly g = gcd(l, d);
      l = *exact_divide(l * d, g);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RatFunc& x = m(i, j);
      if (x.is_zero()) continue;
      out[i][j] = x.num() * *exact_divide(l, x.den());
    }
  }
  return out;
}

std::size_t rank_ff(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return kernels::bareiss_rank_omp(clear_denominators(m));
}

std::size_t rank_cyclotomic(CycloMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const Cyclotomic inv = m[rank][c].inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const Cyclotomic f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) {
        if (!m[rank][j].is_zero()) m[i][j] -= f * m[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

PolyMatrix specialize(const PolyMatrix& m, Var x, const RatFunc& value) {
  PolyMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const Poly& p : m[i]) {
      RatFunc s = RatFunc(p).substitute(x, value);
      if (!s.den().is_constant()) throw ArithmeticError("specialize: result is not a polynomial");
      out[i].push_back(s.num().scaled(s.den().constant_term().inverse()));
    }
  }
  return out;
}

}  // namespace hyperloc
