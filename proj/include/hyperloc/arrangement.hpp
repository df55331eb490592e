#ifndef HYPERLOC_ARRANGEMENT_HPP
#define HYPERLOC_ARRANGEMENT_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperloc/cyclotomic.hpp"

namespace hyperloc {

class ArrangementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateHyperplaneError : public ArrangementError {
 public:
  using ArrangementError::ArrangementError;
};

class ParseError : public ArrangementError {
 public:
  using ArrangementError::ArrangementError;
};

/// ker(normal . x + constant). The constant is zero for central hyperplanes.
struct Hyperplane {
  std::string label;
  std::vector<Cyclotomic> normal;
  Cyclotomic constant;
};

/// A nonempty intersection of hyperplanes, recorded by the (closed) set of
/// every hyperplane containing it.
struct Flat {
  std::vector<int> indices;
  int rank = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
};

/// Ordered list of distinct hyperplanes in C^l. The position of a hyperplane
/// is its coordinate index on the character torus. Immutable; the
/// intersection poset is computed once, on construction.
class Arrangement {
 public:
  Arrangement(std::string name, int ambient_dim, std::vector<Hyperplane> hyperplanes,
              int conductor = 1);

  const std::string& name() const { return name_; }
  int ambient_dim() const { return ambient_dim_; }
  int conductor() const { return conductor_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
  std::vector<std::string> labels() const;
  std::optional<int> index_of(const std::string& label) const;

  bool is_central() const;
  bool is_real() const;

  /// Flats of rank 1..l, sorted by (rank, indices); computed on first use.
  const std::vector<Flat>& flats() const;
  std::vector<Flat> flats_of_rank(int rank) const;
  /// Rank-2 flats containing at least three hyperplanes.
  std::vector<Flat> multiple_points() const;

  Arrangement renamed(std::string name) const;

 private:
  std::string name_;
  int ambient_dim_;
  int conductor_;
  std::vector<Hyperplane> hyperplanes_;
  struct FlatCache {
    std::once_flag once;
    std::vector<Flat> flats;
  };
  std::shared_ptr<FlatCache> flats_;
};

/// The intersection poset L(A) without its bottom element.
const std::vector<Flat>& intersection_poset(const Arrangement& a);

/// Coefficients (ascending in t) of the Poincare polynomial, via the Mobius
/// function of the intersection poset.
std::vector<long long> poincare_polynomial(const Arrangement& a);

/// Alternating coefficient sum, i.e. the Euler characteristic of M(A).
long long euler_characteristic(const std::vector<long long>& poincare);

/// Deletion-restriction triple for a distinguished hyperplane.
struct Triple {
  Arrangement full;
  Arrangement deleted;
  Arrangement restricted;
  int pivot;
  /// trace[k] = indices into `deleted` of the hyperplanes K with K cap H
  /// equal to the k-th hyperplane of `restricted`.
  std::vector<std::vector<int>> trace;
};

Triple make_triple(const Arrangement& a, int pivot);

/// Affine arrangement obtained by setting the pivot's linear form to 1.
Arrangement decone(const Arrangement& a, int pivot);
/// Central arrangement in one more dimension; the new hyperplane is last.
Arrangement cone(const Arrangement& a);

/// Built-in families: monomial_full (A_r), monomial_deletion (D_r), boolean,
/// braid. `r` is used by the monomial families, `dim` by the others.
Arrangement family(const std::string& name, int r, int dim = 3);

/// Product of linear forms and power differences (x_i^r - x_j^r). A power
/// difference expands to x_i - zeta_r^k x_j, k = 1..r, labelled "H{i}{j}:{k}";
/// multiples of a coordinate are labelled "H{i}", other forms "L{position}".
/// The ambient dimension defaults to the largest variable index.
Arrangement parse_defining_polynomial(const std::string& text,
                                      std::optional<int> dim = std::nullopt);

/// The defining polynomial of A_r or D_r as a string the parser accepts.
std::string monomial_polynomial(int r, bool deleted);

/// True if some permutation maps every flat of `a` onto a flat of `b`; the
/// permutation is given explicitly (perm[i] = image of hyperplane i).
bool flats_correspond(const Arrangement& a, const Arrangement& b, const std::vector<int>& perm);

/// Incremental reduced row echelon basis over Q(zeta).
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}
  std::vector<Cyclotomic> reduce(std::vector<Cyclotomic> v) const;
  bool contains(const std::vector<Cyclotomic>& v) const;
  /// Adds v; returns false if it was already in the span.
  bool add(std::vector<Cyclotomic> v);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t width_;
  std::vector<std::vector<Cyclotomic>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hyperloc

#endif  // HYPERLOC_ARRANGEMENT_HPP
