#include "hyperloc/wiring.hpp"

#include <algorithm>
#include <numeric>

namespace hyperloc {

namespace {

bool less(const Cyclotomic& a, const Cyclotomic& b) { return (b - a).real_sign() > 0; }

struct Vertex {
  Cyclotomic x;
  Cyclotomic y;
  std::vector<int> lines;
};

void check_real_plane(const Arrangement& a) {
  if (a.ambient_dim() != 2) {
    throw UnsupportedError("wiring diagrams need a line arrangement in the plane, got dimension " +
                           std::to_string(a.ambient_dim()));
  }
  if (!a.is_real()) throw UnsupportedError("arrangement '" + a.name() + "' is not real");
}

std::vector<Vertex> vertices(const Arrangement& a) {
  std::vector<Vertex> out;
  for (const Flat& f : a.flats_of_rank(2)) {
    const Hyperplane& p = a[f.indices[0]];
    const Hyperplane& q = a[f.indices[1]];
    const Cyclotomic det = p.normal[0] * q.normal[1] - q.normal[0] * p.normal[1];
    Vertex v;
    v.x = (p.normal[1] * q.constant - q.normal[1] * p.constant) / det;
    v.y = (q.normal[0] * p.constant - p.normal[0] * q.constant) / det;
    v.lines = f.indices;
    out.push_back(std::move(v));
  }
  return out;
}

// Shears under which some line becomes vertical or two vertices share X.
std::vector<Cyclotomic> bad_shears(const Arrangement& a, const std::vector<Vertex>& vs) {
  std::vector<Cyclotomic> bad;
  for (const auto& h : a.hyperplanes()) {
    if (!h.normal[0].is_zero()) bad.push_back(-h.normal[1] / h.normal[0]);
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Cyclotomic dy = vs[i].y - vs[j].y;
      if (!dy.is_zero()) bad.push_back((vs[i].x - vs[j].x) / dy);
    }
  }
  return bad;
}

bool admissible(const Rational& s, const std::vector<Cyclotomic>& bad) {
  const Cyclotomic c(s);
  return std::none_of(bad.begin(), bad.end(), [&](const Cyclotomic& b) { return b == c; });
}

WiringDiagram build(const Arrangement& a, const std::vector<Vertex>& vs, const Rational& s) {
  WiringDiagram wd;
  wd.shear = s;
  const Cyclotomic sc(s);
  for (const auto& h : a.hyperplanes()) {
    // a x + b y + c = 0 with x = X + sY gives aX + (as + b)Y + c = 0.
    const Cyclotomic d = h.normal[0] * sc + h.normal[1];
    wd.lines.push_back(WiringLine{-h.normal[0] / d, -h.constant / d});
  }

  std::vector<std::pair<Cyclotomic, std::size_t>> xs;
  for (std::size_t i = 0; i < vs.size(); ++i) xs.emplace_back(vs[i].x - sc * vs[i].y, i);
  std::sort(xs.begin(), xs.end(), [](const auto& p, const auto& q) { return less(p.first, q.first); });

  const int n = static_cast<int>(a.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const Cyclotomic x0 = xs.empty() ? Cyclotomic(0) : xs.front().first - Cyclotomic(1);
  std::vector<Cyclotomic> y0;
  for (const auto& l : wd.lines) y0.push_back(l.slope * x0 + l.intercept);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return less(y0[i], y0[j]); });
  wd.initial_order = order;

  std::vector<int> pos(n);
  for (const auto& [x, vi] : xs) {
    for (int p = 0; p < n; ++p) pos[order[p]] = p;
    WiringEvent ev;
    ev.x = x;
    ev.lines = vs[vi].lines;
    ev.order_before = order;
    int lo = n, hi = -1;
    for (int l : ev.lines) {
      lo = std::min(lo, pos[l]);
      hi = std::max(hi, pos[l]);
    }
    if (hi - lo + 1 != static_cast<int>(ev.lines.size())) {
      throw ArithmeticError("wiring diagram: lines through a vertex are not adjacent");
    }
    ev.first = lo;
    std::reverse(order.begin() + lo, order.begin() + hi + 1);
    wd.events.push_back(std::move(ev));
  }
  return wd;
}

}  // namespace

WiringDiagram wiring_diagram(const Arrangement& affine, const Rational& shear) {
  check_real_plane(affine);
  const auto vs = vertices(affine);
  if (!admissible(shear, bad_shears(affine, vs))) {
    throw std::invalid_argument("shear " + detail::rational_to_string(shear) + " is degenerate");
  }
  return build(affine, vs, shear);
}

WiringDiagram wiring_diagram(const Arrangement& affine) {
  check_real_plane(affine);
  const auto vs = vertices(affine);
  const auto bad = bad_shears(affine, vs);
  // Positive rationals p/q by height max(p, q), then by q, then by p.
  for (long h = 1;; ++h) {
    for (long q = 1; q <= h; ++q) {
      for (long p = 1; p <= h; ++p) {
        if (std::max(p, q) != h || std::gcd(p, q) != 1) continue;
        Rational s{mpz_class(p), mpz_class(q)};
        s.canonicalize();
        if (admissible(s, bad)) return build(affine, vs, s);
      }
    }
  }
}

}  // namespace hyperloc
