#include "hyperloc/presentation.hpp"

#include <stdexcept>

namespace hyperloc {

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Presentation presentation(const WiringDiagram& wd, const std::vector<std::string>& names) {
  const std::size_t n = wd.lines.size();
  if (names.size() != n) throw std::invalid_argument("one generator name per line is required");
  Presentation p;
  p.generators = names;
  // y[pos]: meridian of the line currently at that position, as a word in
  // the meridians at the base fiber.
  std::vector<Word> y(n);
  for (std::size_t pos = 0; pos < n; ++pos) y[pos] = {wd.initial_order[pos] + 1};

  for (std::size_t e = 0; e < wd.events.size(); ++e) {
    const auto& ev = wd.events[e];
    const int k = static_cast<int>(ev.lines.size());
    const int s = ev.first;
    // Local loop around the vertex: top to bottom.
    std::vector<Word> local;
    for (int i = s + k - 1; i >= s; --i) local.push_back(y[i]);
    auto rotation = [&](int m) {
      Word w;
      for (int i = 0; i < k; ++i) w = concat(w, local[(m + i) % k]);
      return w;
    };
    const Word r0 = rotation(0);
    for (int m = 1; m < k; ++m) {
      p.relators.push_back(concat(r0, inverse(rotation(m))));
      p.relator_source.push_back(static_cast<int>(e));
    }
    // Half-twist passing above the vertex, as adjacent swaps; each swap keeps
    // the top-to-bottom product of the pair fixed.
    for (int t = 0; t + 1 < k; ++t) {
      for (int i = s; i < s + k - 1 - t; ++i) {
        Word lower = y[i + 1];
        Word upper = concat(concat(y[i + 1], y[i]), inverse(y[i + 1]));
        y[i] = std::move(lower);
        y[i + 1] = std::move(upper);
      }
    }
  }
  return p;
}

std::vector<std::vector<long long>> abelianized_relators(const Presentation& p) {
  std::vector<std::vector<long long>> out;
  for (const auto& r : p.relators) {
    std::vector<long long> row(p.generators.size(), 0);
    for (int x : r) {
      const std::size_t g = static_cast<std::size_t>(std::abs(x)) - 1;
      if (g >= row.size()) throw std::invalid_argument("relator uses an unknown generator");
      row[g] += x > 0 ? 1 : -1;
    }
    out.push_back(std::move(row));
  }
  return out;
}

Presentation conjugate_relator(const Presentation& p, std::size_t k, int g) {
  if (k >= p.relators.size()) throw std::out_of_range("relator index");
  if (g == 0 || static_cast<std::size_t>(std::abs(g)) > p.generators.size()) {
    throw std::out_of_range("generator index");
  }
  Presentation out = p;
  out.relators[k] = concat(concat(Word{g}, p.relators[k]), Word{-g});
  return out;
}

}  // namespace hyperloc
