#ifndef HYPERLOC_MATRIX_HPP
#define HYPERLOC_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "hyperloc/cyclotomic.hpp"
#include "hyperloc/ratfunc.hpp"

namespace hyperloc {

/// Dense matrix over Q(zeta_N)(u, v).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> data_;
};

using PolyMatrix = std::vector<std::vector<Poly>>;
using CycloMatrix = std::vector<std::vector<Cyclotomic>>;

/// Multiplies each row by the lcm of its denominators. Row scaling by a
/// nonzero element preserves rank.
PolyMatrix clear_denominators(const ExactMatrix& m);

/// Rank over Q(zeta_N)(u, v) via fraction-free elimination.
std::size_t rank_ff(const ExactMatrix& m);

/// Rank of a constant matrix by ordinary Gaussian elimination in Q(zeta_N).
/// Shares no code with the fraction-free path.
std::size_t rank_cyclotomic(CycloMatrix m);

/// Substitutes u (and v) into every entry of a polynomial matrix.
PolyMatrix specialize(const PolyMatrix& m, Var x, const RatFunc& value);

}  // namespace hyperloc

#endif  // HYPERLOC_MATRIX_HPP
