#ifndef HYPERLOC_WIRING_HPP
#define HYPERLOC_WIRING_HPP

#include <stdexcept>
#include <vector>

#include "hyperloc/arrangement.hpp"

namespace hyperloc {

/// Raised for inputs outside the real oracle's reach.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A line Y = slope * X + intercept in sheared coordinates.
struct WiringLine {
  Cyclotomic slope;
  Cyclotomic intercept;
};

struct WiringEvent {
  Cyclotomic x;
  /// Lines through the vertex, sorted by index.
  std::vector<int> lines;
  /// Position (0-based, ascending Y) of the lowest of them just before the
  /// vertex; they occupy positions first .. first + lines.size() - 1.
  int first = 0;
  /// Lines by ascending Y just before the vertex.
  std::vector<int> order_before;
};

/// Sweep record of a real affine line arrangement, after the shear
/// x = X + shear * Y.
struct WiringDiagram {
  Rational shear;
  std::vector<WiringLine> lines;
  /// Lines by ascending Y to the left of every vertex.
  std::vector<int> initial_order;
  std::vector<WiringEvent> events;
};

/// Needs ambient dimension 2 and real coefficients; otherwise raises
/// UnsupportedError. The shear is the smallest-height positive rational
/// that leaves no vertical line and no two vertices over the same X.
WiringDiagram wiring_diagram(const Arrangement& affine);

/// Same with a caller-chosen shear; raises std::invalid_argument if it is
/// degenerate.
WiringDiagram wiring_diagram(const Arrangement& affine, const Rational& shear);

}  // namespace hyperloc

#endif  // HYPERLOC_WIRING_HPP
