#include "hyperloc/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hyperloc {

// ------------------------------------------------------------- RowSpace

std::vector<Cyclotomic> RowSpace::reduce(std::vector<Cyclotomic> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Cyclotomic f = v[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < width_; ++j) {
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
  }
  return v;
}

bool RowSpace::contains(const std::vector<Cyclotomic>& v) const {
  auto red = reduce(v);
  return std::all_of(red.begin(), red.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

bool RowSpace::add(std::vector<Cyclotomic> v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < width_ && v[p].is_zero()) ++p;
  if (p == width_) return false;
  const Cyclotomic inv = v[p].inverse();
  for (auto& c : v) c *= inv;
  for (auto& row : rows_) {
    const Cyclotomic f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < width_; ++j) {
      if (!v[j].is_zero()) row[j] -= f * v[j];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

// ---------------------------------------------------------- Arrangement

namespace {

std::vector<Cyclotomic> augmented(const Hyperplane& h) {
  std::vector<Cyclotomic> row = h.normal;
  row.push_back(h.constant);
  return row;
}

bool proportional(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  RowSpace s(a.size());
  s.add(a);
  return s.contains(b);
}

struct FlatBuilder {
  const std::vector<Hyperplane>& hs;
  std::size_t width;

  // Closure of a consistent equation set: every hyperplane whose augmented
  // row lies in the span. Returns nullopt when the intersection is empty.
  std::optional<Flat> closure(const std::vector<int>& members) const {
    RowSpace aug(width + 1);
    RowSpace lin(width);
    for (int i : members) {
      aug.add(augmented(hs[i]));
      lin.add(hs[i].normal);
    }
    if (aug.rank() != lin.rank()) return std::nullopt;
    Flat f;
    f.rank = static_cast<int>(lin.rank());
    for (int h = 0; h < static_cast<int>(hs.size()); ++h) {
      if (aug.contains(augmented(hs[h]))) f.indices.push_back(h);
    }
    return f;
  }
};

std::vector<Flat> compute_flats(const std::vector<Hyperplane>& hs, int dim) {
  std::vector<Flat> all;
  FlatBuilder builder{hs, static_cast<std::size_t>(dim)};
  std::vector<Flat> level;
  for (int i = 0; i < static_cast<int>(hs.size()); ++i) level.push_back(Flat{{i}, 1});
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    std::set<std::vector<int>> seen;
    std::vector<Flat> next;
    for (const Flat& f : level) {
      std::size_t cursor = 0;
      for (int h = 0; h < static_cast<int>(hs.size()); ++h) {
        while (cursor < f.indices.size() && f.indices[cursor] < h) ++cursor;
        if (cursor < f.indices.size() && f.indices[cursor] == h) continue;
        std::vector<int> members = f.indices;
        members.push_back(h);
        auto g = builder.closure(members);
        if (!g) continue;
        if (seen.insert(g->indices).second) next.push_back(std::move(*g));
      }
    }
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.indices < b.indices;
  });
  return all;
}

}  // namespace

Arrangement::Arrangement(std::string name, int ambient_dim, std::vector<Hyperplane> hyperplanes,
                         int conductor)
    : name_(std::move(name)),
      ambient_dim_(ambient_dim),
      conductor_(conductor),
      hyperplanes_(std::move(hyperplanes)) {
  if (ambient_dim_ < 0) throw ArrangementError("negative ambient dimension");
  std::set<std::string> labels;
  for (const auto& h : hyperplanes_) {
    if (static_cast<int>(h.normal.size()) != ambient_dim_) {
      throw ArrangementError("hyperplane " + h.label + " has wrong normal length");
    }
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Cyclotomic& c) { return c.is_zero(); })) {
      throw ArrangementError("hyperplane " + h.label + " has zero normal");
    }
    for (const auto& c : h.normal) conductor_ = std::lcm(conductor_, c.conductor());
    conductor_ = std::lcm(conductor_, h.constant.conductor());
  }
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    for (std::size_t j = i + 1; j < hyperplanes_.size(); ++j) {
      if (proportional(augmented(hyperplanes_[i]), augmented(hyperplanes_[j]))) {
        throw DuplicateHyperplaneError("hyperplanes " + hyperplanes_[i].label + " and " +
                                       hyperplanes_[j].label + " coincide");
      }
    }
  }
  for (const auto& h : hyperplanes_) {
    if (!labels.insert(h.label).second) throw ArrangementError("duplicate label " + h.label);
  }
  flats_ = std::make_shared<FlatCache>();
}

const std::vector<Flat>& Arrangement::flats() const {
  std::call_once(flats_->once, [this] { flats_->flats = compute_flats(hyperplanes_, ambient_dim_); });
  return flats_->flats;
}

std::vector<std::string> Arrangement::labels() const {
  std::vector<std::string> out;
  for (const auto& h : hyperplanes_) out.push_back(h.label);
  return out;
}

std::optional<int> Arrangement::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    if (hyperplanes_[i].label == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool Arrangement::is_central() const {
  return std::all_of(hyperplanes_.begin(), hyperplanes_.end(),
                     [](const Hyperplane& h) { return h.constant.is_zero(); });
}

bool Arrangement::is_real() const {
  for (const auto& h : hyperplanes_) {
    if (!h.constant.is_real()) return false;
    for (const auto& c : h.normal) {
      if (!c.is_real()) return false;
    }
  }
  return true;
}

std::vector<Flat> Arrangement::flats_of_rank(int rank) const {
  std::vector<Flat> out;
  for (const auto& f : flats()) {
    if (f.rank == rank) out.push_back(f);
  }
  return out;
}

std::vector<Flat> Arrangement::multiple_points() const {
  std::vector<Flat> out;
  for (const auto& f : flats()) {
    if (f.rank == 2 && f.indices.size() >= 3) out.push_back(f);
  }
  return out;
}

Arrangement Arrangement::renamed(std::string name) const {
  Arrangement out = *this;
  out.name_ = std::move(name);
  return out;
}

const std::vector<Flat>& intersection_poset(const Arrangement& a) { return a.flats(); }

std::vector<long long> poincare_polynomial(const Arrangement& a) {
  const auto& flats = a.flats();
  std::vector<long long> mu(flats.size(), 0);
  std::vector<long long> poly(1, 1);
  for (std::size_t x = 0; x < flats.size(); ++x) {
    long long m = -1;  // bottom element contributes mu = 1
    for (std::size_t y = 0; y < x; ++y) {
      if (flats[y].rank >= flats[x].rank) continue;
      if (std::includes(flats[x].indices.begin(), flats[x].indices.end(),
                        flats[y].indices.begin(), flats[y].indices.end())) {
        m -= mu[y];
      }
    }
    mu[x] = m;
    const int r = flats[x].rank;
    if (static_cast<int>(poly.size()) <= r) poly.resize(r + 1, 0);
    poly[r] += (r % 2 == 0 ? m : -m);
  }
  return poly;
}

long long euler_characteristic(const std::vector<long long>& poincare) {
  long long chi = 0;
  for (std::size_t q = 0; q < poincare.size(); ++q) chi += (q % 2 == 0 ? 1 : -1) * poincare[q];
  return chi;
}

// -------------------------------------------------- restriction, decone

namespace {

int last_nonzero(const std::vector<Cyclotomic>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (!v[i].is_zero()) return i;
  }
  throw ArrangementError("zero normal");
}

// Restricts K to {a.x + c = 0} by eliminating the coordinate p. Returns
// the form in the remaining coordinates (normal, constant).
std::pair<std::vector<Cyclotomic>, Cyclotomic> restrict_form(const Hyperplane& h, int p,
                                                             const Hyperplane& k) {
  const Cyclotomic ratio = k.normal[p] / h.normal[p];
  std::vector<Cyclotomic> normal;
  for (int i = 0; i < static_cast<int>(k.normal.size()); ++i) {
    if (i == p) continue;
    normal.push_back(k.normal[i] - ratio * h.normal[i]);
  }
  return {normal, k.constant - ratio * h.constant};
}

void normalize_form(std::vector<Cyclotomic>& normal, Cyclotomic& constant) {
  for (const auto& c : normal) {
    if (c.is_zero()) continue;
    const Cyclotomic inv = c.inverse();
    for (auto& x : normal) x *= inv;
    constant *= inv;
    return;
  }
}

}  // namespace

Triple make_triple(const Arrangement& a, int pivot) {
  if (pivot < 0 || pivot >= static_cast<int>(a.size())) {
    throw ArrangementError("invalid pivot " + std::to_string(pivot));
  }
  if (a.size() < 2) throw ArrangementError("triple needs at least two hyperplanes");
  const Hyperplane& h = a[pivot];
  const int p = last_nonzero(h.normal);

  std::vector<Hyperplane> deleted;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(i) != pivot) deleted.push_back(a[i]);
  }

  std::vector<Hyperplane> restricted;
  std::vector<std::vector<int>> trace;
  std::vector<std::vector<Cyclotomic>> keys;
  for (int k = 0; k < static_cast<int>(deleted.size()); ++k) {
    auto [normal, constant] = restrict_form(h, p, deleted[k]);
    if (std::all_of(normal.begin(), normal.end(), [](const Cyclotomic& c) { return c.is_zero(); })) {
      continue;  // parallel to H: empty intersection
    }
    normalize_form(normal, constant);
    std::vector<Cyclotomic> key = normal;
    key.push_back(constant);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      restricted.push_back(Hyperplane{deleted[k].label + "''", normal, constant});
      trace.push_back({k});
    } else {
      trace[it - keys.begin()].push_back(k);
    }
  }
  const std::string& pl = h.label;
  Arrangement del(a.name() + " \\ " + pl, a.ambient_dim(), std::move(deleted), a.conductor());
  Arrangement res(a.name() + " | " + pl, a.ambient_dim() - 1, std::move(restricted), a.conductor());
  return Triple{a, std::move(del), std::move(res), pivot, std::move(trace)};
}

Arrangement decone(const Arrangement& a, int pivot) {
  if (!a.is_central()) throw ArrangementError("decone of a non-central arrangement");
  if (pivot < 0 || pivot >= static_cast<int>(a.size())) {
    throw ArrangementError("invalid pivot " + std::to_string(pivot));
  }
  // Setting the pivot form to 1 is restriction to {pivot - 1 = 0}.
  Hyperplane h = a[pivot];
  h.constant = Cyclotomic(-1);
  const int p = last_nonzero(h.normal);
  std::vector<Hyperplane> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(i) == pivot) continue;
    auto [normal, constant] = restrict_form(h, p, a[i]);
    out.push_back(Hyperplane{a[i].label, std::move(normal), std::move(constant)});
  }
  return Arrangement("decone(" + a.name() + "," + a[pivot].label + ")", a.ambient_dim() - 1,
                     std::move(out), a.conductor());
}

Arrangement cone(const Arrangement& a) {
  std::vector<Hyperplane> out;
  const int dim = a.ambient_dim() + 1;
  for (const auto& h : a.hyperplanes()) {
    Hyperplane c{h.label, h.normal, Cyclotomic()};
    c.normal.push_back(h.constant);
    out.push_back(std::move(c));
  }
  std::string label = "Hinf";
  while (a.index_of(label)) label += "'";
  std::vector<Cyclotomic> normal(dim, Cyclotomic());
  normal.back() = Cyclotomic(1);
  out.push_back(Hyperplane{label, std::move(normal), Cyclotomic()});
  return Arrangement("cone(" + a.name() + ")", dim, std::move(out), a.conductor());
}

// ------------------------------------------------------------ families

namespace {

Hyperplane coordinate(int i, int dim) {
  std::vector<Cyclotomic> n(dim, Cyclotomic());
  n[i - 1] = Cyclotomic(1);
  return Hyperplane{"H" + std::to_string(i), std::move(n), Cyclotomic()};
}

// x_i - zeta_r^k x_j
Hyperplane monomial_form(int i, int j, int r, int k, int dim) {
  std::vector<Cyclotomic> n(dim, Cyclotomic());
  n[i - 1] = Cyclotomic(1);
  n[j - 1] = -Cyclotomic::zeta(r, k);
  return Hyperplane{"H" + std::to_string(i) + std::to_string(j) + ":" + std::to_string(k),
                    std::move(n), Cyclotomic()};
}

}  // namespace

std::string monomial_polynomial(int r, bool deleted) {
  const std::string rs = std::to_string(r);
  std::string s = deleted ? "x1*x2" : "x1*x2*x3";
  s += "*(x1^" + rs + "-x2^" + rs + ")*(x1^" + rs + "-x3^" + rs + ")*(x2^" + rs + "-x3^" + rs + ")";
  return s;
}

Arrangement family(const std::string& name, int r, int dim) {
  if (name == "monomial_full" || name == "monomial_deletion") {
    if (r < 2) throw std::invalid_argument("monomial families need r >= 2");
    const bool deleted = name == "monomial_deletion";
    std::vector<Hyperplane> hs;
    hs.push_back(coordinate(1, 3));
    hs.push_back(coordinate(2, 3));
    if (!deleted) hs.push_back(coordinate(3, 3));
    for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
      for (int k = 1; k <= r; ++k) hs.push_back(monomial_form(i, j, r, k, 3));
    }
    return Arrangement(name + "(r=" + std::to_string(r) + ")", 3, std::move(hs), r);
  }
  if (name == "boolean") {
    if (dim < 1) throw std::invalid_argument("boolean family needs dim >= 1");
    std::vector<Hyperplane> hs;
    for (int i = 1; i <= dim; ++i) hs.push_back(coordinate(i, dim));
    return Arrangement("boolean(l=" + std::to_string(dim) + ")", dim, std::move(hs));
  }
  if (name == "braid") {
    if (dim < 2) throw std::invalid_argument("braid family needs dim >= 2");
    std::vector<Hyperplane> hs;
    for (int i = 1; i <= dim; ++i) {
      for (int j = i + 1; j <= dim; ++j) {
        std::vector<Cyclotomic> n(dim, Cyclotomic());
        n[i - 1] = Cyclotomic(1);
        n[j - 1] = Cyclotomic(-1);
        hs.push_back(Hyperplane{"H" + std::to_string(i) + std::to_string(j), std::move(n), Cyclotomic()});
      }
    }
    return Arrangement("braid(l=" + std::to_string(dim) + ")", dim, std::move(hs));
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

bool flats_correspond(const Arrangement& a, const Arrangement& b, const std::vector<int>& perm) {
  if (a.size() != b.size() || perm.size() != a.size()) return false;
  std::set<std::pair<int, std::vector<int>>> target;
  for (const auto& f : b.flats()) target.emplace(f.rank, f.indices);
  if (target.size() != a.flats().size()) return false;
  for (const auto& f : a.flats()) {
    std::vector<int> img;
    for (int i : f.indices) img.push_back(perm[i]);
    std::sort(img.begin(), img.end());
    if (!target.count({f.rank, img})) return false;
  }
  return true;
}

}  // namespace hyperloc
