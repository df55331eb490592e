#ifndef HYPERLOC_PRESENTATION_HPP
#define HYPERLOC_PRESENTATION_HPP

#include <string>
#include <vector>

#include "hyperloc/wiring.hpp"

namespace hyperloc {

/// Word in a free group: entry +i is generator i (1-based), -i its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  /// Index of the wiring event each relator came from (-1 if user supplied).
  std::vector<int> relator_source;
};

/// Sweep presentation of pi_1 of the complement: one meridian generator per
/// line, and at each vertex the relations making all cyclic rotations of
/// the product of the local meridians equal. Generator i belongs to line i.
Presentation presentation(const WiringDiagram& wd, const std::vector<std::string>& names);

/// Exponent sum of each generator in each relator; all zero for a
/// presentation whose abelianization is free of rank n.
std::vector<std::vector<long long>> abelianized_relators(const Presentation& p);

/// Replaces relator k by g R g^-1 for generator g (signed, 1-based).
Presentation conjugate_relator(const Presentation& p, std::size_t k, int g);

}  // namespace hyperloc

#endif  // HYPERLOC_PRESENTATION_HPP
