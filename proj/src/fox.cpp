#include "hyperloc/fox.hpp"

#include <algorithm>

#include "hyperloc/wiring.hpp"

namespace hyperloc {

LaurentMatrix fox_jacobian(const Presentation& p) {
  const std::size_t n = p.generators.size();
  LaurentMatrix out(p.relators.size(), std::vector<Laurent>(n));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    std::vector<int> prefix(n, 0);
    for (int x : p.relators[r]) {
      const std::size_t g = static_cast<std::size_t>(std::abs(x)) - 1;
      if (g >= n) throw std::invalid_argument("relator uses an unknown generator");
      Laurent& entry = out[r][g];
      if (x > 0) {
        // d(w g)/dg = w
        entry[prefix] += 1;
        ++prefix[g];
      } else {
        // d(w g^-1)/dg = -w g^-1
        --prefix[g];
        entry[prefix] -= 1;
      }
    }
    for (auto& entry : out[r]) std::erase_if(entry, [](const auto& kv) { return kv.second == 0; });
  }
  return out;
}

ExactMatrix fox_matrix(const Presentation& p, const std::vector<RatFunc>& t) {
  if (t.size() != p.generators.size()) {
    throw std::invalid_argument("character has " + std::to_string(t.size()) + " coordinates for " +
                                std::to_string(p.generators.size()) + " generators");
  }
  for (const auto& x : t) {
    if (x.is_zero()) throw std::invalid_argument("character coordinate is zero");
  }
  return kernels::evaluate_omp(fox_jacobian(p), t);
}

std::size_t h1_dim(const Presentation& p, const std::vector<RatFunc>& t) {
  const std::size_t n = p.generators.size();
  if (t.size() != n) throw std::invalid_argument("character length does not match the presentation");
  if (std::all_of(t.begin(), t.end(), [](const RatFunc& x) { return x.is_one(); })) return n;
  return n - 1 - rank_ff(fox_matrix(p, t));
}

Presentation deconed_presentation(const Arrangement& central, int pivot) {
  const Arrangement affine = decone(central, pivot);
  return presentation(wiring_diagram(affine), affine.labels());
}

Sigma1Result sigma1_membership(const Arrangement& central, const Character& t, int m,
                               std::optional<int> pivot) {
  check_host(t, central);
  if (!central.is_central()) throw ArrangementError("sigma1_membership needs a central arrangement");
  if (m < 1) throw std::invalid_argument("depth m must be at least 1");
  Sigma1Result res;
  if (t.is_trivial()) {
    res.route = "trivial-character";
    res.h1 = central.size();
  } else if (!t.product().is_one()) {
    res.route = "product-criterion";
    res.h1 = 0;
  } else {
    int chosen = -1;
    if (pivot) {
      chosen = *pivot;
      if (chosen < 0 || chosen >= static_cast<int>(central.size())) throw ArrangementError("invalid pivot");
      if (!decone(central, chosen).is_real()) {
        throw UnsupportedError("decone of '" + central.name() + "' at " + central[chosen].label + " is not real");
      }
    } else {
      for (int p = 0; p < static_cast<int>(central.size()) && chosen < 0; ++p) {
        if (decone(central, p).is_real()) chosen = p;
      }
      if (chosen < 0) throw UnsupportedError("no decone of '" + central.name() + "' is real");
    }
    res.route = "fox";
    res.pivot = chosen;
    const Character dt = decone_character(t, central, chosen);
    res.h1 = h1_dim(deconed_presentation(central, chosen), dt.coords);
  }
  res.member = res.h1 >= static_cast<std::size_t>(m);
  return res;
}

}  // namespace hyperloc
