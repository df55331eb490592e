#ifndef HYPERLOC_LOCAL_SYSTEMS_HPP
#define HYPERLOC_LOCAL_SYSTEMS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "hyperloc/arrangement.hpp"
#include "hyperloc/ratfunc.hpp"

namespace hyperloc {

class HostMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rank-one local system on M(A): coordinate j is the monodromy about the
/// j-th hyperplane of the host.
struct Character {
  std::string host;
  std::vector<RatFunc> coords;

  std::size_t size() const { return coords.size(); }
  bool is_trivial() const;
  /// Coordinate-wise product; hosts must agree.
  Character operator*(const Character& other) const;
  /// Substitutes a parameter in every coordinate.
  Character substitute(Var x, const RatFunc& value) const;
  /// Product of all coordinates.
  RatFunc product() const;
};

Character trivial_character(const Arrangement& a);

/// Throws HostMismatchError unless t has one coordinate per hyperplane of a
/// and names it as host (an empty host name matches any arrangement).
void check_host(const Character& t, const Arrangement& a);

/// Translated subtorus tau * {(u^a_j v^b_j)}: a root-of-unity translation and
/// an exponent vector per coordinate. Only u is used when dimension is 1.
struct ParamSubtorus {
  std::string host;
  std::vector<Cyclotomic> translation;
  std::vector<Exponent> exponents;
  int dimension = 1;

  /// The generic point, with u and v left as indeterminates.
  Character point() const;
};

/// The two-parameter component C on A_r, with w eliminated as 1/(uv).
ParamSubtorus component_C(int r);
/// The displayed coordinates of C_q on D_r, v replaced by zeta^-q / u.
Character component_Cq_point(int r, int q);
/// C_q as a translated subtorus, decomposed from component_Cq_point.
ParamSubtorus component_Cq(int r, int q);
/// The connected one-dimensional subtorus T on D_r.
ParamSubtorus torus_T(int r);
/// The translation character tau_q on D_r.
Character tau(int r, int q);

/// Least k >= 1 such that translation^k lies on the connected subtorus.
long long translation_order(const ParamSubtorus& s);

/// i^*: the character on the full arrangement with 1 at the pivot.
Character extend_character(const Character& t, const Triple& triple);
/// j^*: coordinate of a restricted hyperplane is the product over its trace.
Character restrict_character(const Character& t, const Triple& triple);
/// Drops the pivot coordinate, as for the character of decone(A, pivot).
Character decone_character(const Character& t, const Arrangement& a, int pivot);

/// No coordinate is identically 1.
bool is_essential(const Character& t);
bool is_essential(const ParamSubtorus& s);

/// A_r and D_r with the triple for pivot H3, the deletion renamed so that
/// characters built on D_r are accepted.
Triple monomial_triple(int r);

}  // namespace hyperloc

#endif  // HYPERLOC_LOCAL_SYSTEMS_HPP
