#ifndef HYPERLOC_KERNELS_BAREISS_HPP
#define HYPERLOC_KERNELS_BAREISS_HPP

#include <cstddef>

#include "hyperloc/matrix.hpp"

namespace hyperloc::kernels {

// Fraction-free (Bareiss) rank over the polynomial ring Q(zeta)[u, v] with
// full pivot search. Both versions pick the same pivots, so they perform the
// same exact divisions and agree entry for entry.
std::size_t bareiss_rank_serial(PolyMatrix m);
std::size_t bareiss_rank_omp(PolyMatrix m);

}  // namespace hyperloc::kernels

#endif  // HYPERLOC_KERNELS_BAREISS_HPP
