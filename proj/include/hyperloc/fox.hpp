#ifndef HYPERLOC_FOX_HPP
#define HYPERLOC_FOX_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperloc/kernels/fox_eval.hpp"
#include "hyperloc/local_systems.hpp"
#include "hyperloc/presentation.hpp"

namespace hyperloc {

using kernels::Laurent;
using kernels::LaurentMatrix;

/// Fox derivatives of every relator, pushed to the group ring of the
/// abelianization: entry (R, j) is the image of dR/dg_j in Z[t^(+-1)].
LaurentMatrix fox_jacobian(const Presentation& p);

/// The Alexander matrix at t: fox_jacobian evaluated at t_j for g_j.
ExactMatrix fox_matrix(const Presentation& p, const std::vector<RatFunc>& t);

/// Twisted first Betti number of the presentation complex at t: for t != 1
/// this is (generators - 1 - rank of the Alexander matrix); for t = 1 it is
/// the number of generators.
std::size_t h1_dim(const Presentation& p, const std::vector<RatFunc>& t);

/// The presentation of decone(a, pivot) used by the oracle: wiring diagram
/// with the default shear, generators named by hyperplane labels.
Presentation deconed_presentation(const Arrangement& central, int pivot);

struct Sigma1Result {
  bool member = false;
  std::size_t h1 = 0;
  /// "trivial-character", "product-criterion" or "fox".
  std::string route;
  /// Pivot used for deconing (-1 when no decone was needed).
  int pivot = -1;
};

/// Decides dim H^1(M(a); L_t) >= m for a central arrangement. Characters
/// whose coordinate product is not 1 have vanishing cohomology; otherwise
/// the oracle decones (at `pivot`, or at the first hyperplane giving a real
/// affine arrangement) and computes h1_dim there. Raises UnsupportedError
/// when the decone is not real.
Sigma1Result sigma1_membership(const Arrangement& central, const Character& t, int m,
                               std::optional<int> pivot = std::nullopt);

}  // namespace hyperloc

#endif  // HYPERLOC_FOX_HPP
