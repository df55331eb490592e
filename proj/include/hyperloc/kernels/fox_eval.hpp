#ifndef HYPERLOC_KERNELS_FOX_EVAL_HPP
#define HYPERLOC_KERNELS_FOX_EVAL_HPP

#include <map>
#include <vector>

#include "hyperloc/matrix.hpp"

namespace hyperloc::kernels {

/// Laurent polynomial in t_1..t_n with integer coefficients, keyed by the
/// exponent vector.
using Laurent = std::map<std::vector<int>, long long>;
using LaurentMatrix = std::vector<std::vector<Laurent>>;

// Evaluates every entry at t. Powers of each coordinate are computed once,
// then entries are independent; the OpenMP version splits them across
// threads and yields the same matrix.
ExactMatrix evaluate_serial(const LaurentMatrix& m, const std::vector<RatFunc>& t);
ExactMatrix evaluate_omp(const LaurentMatrix& m, const std::vector<RatFunc>& t);

}  // namespace hyperloc::kernels

#endif  // HYPERLOC_KERNELS_FOX_EVAL_HPP
