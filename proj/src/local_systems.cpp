#include "hyperloc/local_systems.hpp"

#include <algorithm>
#include <numeric>

namespace hyperloc {

bool Character::is_trivial() const {
  return std::all_of(coords.begin(), coords.end(), [](const RatFunc& x) { return x.is_one(); });
}

Character Character::operator*(const Character& other) const {
  if (host != other.host || size() != other.size()) {
    throw HostMismatchError("product of characters on '" + host + "' and '" + other.host + "'");
  }
  Character out{host, {}};
  for (std::size_t j = 0; j < size(); ++j) out.coords.push_back(coords[j] * other.coords[j]);
  return out;
}

Character Character::substitute(Var x, const RatFunc& value) const {
  Character out{host, {}};
  for (const auto& c : coords) out.coords.push_back(c.substitute(x, value));
  return out;
}

RatFunc Character::product() const {
  RatFunc p(1);
  for (const auto& c : coords) p *= c;
  return p;
}

Character trivial_character(const Arrangement& a) {
  return Character{a.name(), std::vector<RatFunc>(a.size(), RatFunc(1))};
}

void check_host(const Character& t, const Arrangement& a) {
  if (t.size() != a.size()) {
    throw HostMismatchError("character has " + std::to_string(t.size()) + " coordinates but '" + a.name() +
                            "' has " + std::to_string(a.size()) + " hyperplanes");
  }
  if (!t.host.empty() && t.host != a.name()) {
    throw HostMismatchError("character lives on '" + t.host + "', not on '" + a.name() + "'");
  }
  for (const auto& c : t.coords) {
    if (c.is_zero()) throw std::invalid_argument("character coordinate is zero");
  }
}

Character ParamSubtorus::point() const {
  Character out{host, {}};
  for (std::size_t j = 0; j < translation.size(); ++j) {
    out.coords.push_back(RatFunc::monomial(translation[j], exponents[j].u, exponents[j].v));
  }
  return out;
}

namespace {

void check_r(int r) {
  if (r < 2) throw std::invalid_argument("r must be at least 2, got " + std::to_string(r));
}

void check_q(int r, int q) {
  check_r(r);
  if (q < 1 || q > r - 1) {
    throw std::invalid_argument("q must lie in 1.." + std::to_string(r - 1) + ", got " + std::to_string(q));
  }
}

std::string deletion_name(int r) { return "monomial_deletion(r=" + std::to_string(r) + ")"; }

// Repeats `x` r times.
template <typename T>
void append(std::vector<T>& out, const T& x, int r) {
  for (int k = 0; k < r; ++k) out.push_back(x);
}

}  // namespace

ParamSubtorus component_C(int r) {
  check_r(r);
  ParamSubtorus s;
  s.host = "monomial_full(r=" + std::to_string(r) + ")";
  s.dimension = 2;
  const Exponent u{1, 0}, v{0, 1}, w{-1, -1};
  s.exponents = {Exponent{r, 0}, Exponent{0, r}, Exponent{-r, -r}};
  append(s.exponents, w, r);
  append(s.exponents, v, r);
  append(s.exponents, u, r);
  s.translation.assign(s.exponents.size(), Cyclotomic(1));
  return s;
}

Character component_Cq_point(int r, int q) {
  check_q(r, q);
  const RatFunc u = RatFunc::var(Var::u);
  const RatFunc v = RatFunc::var(Var::v);
  const RatFunc zq(Cyclotomic::zeta(r, q));
  Character c{deletion_name(r), {u.pow(r), v.pow(r)}};
  append(c.coords, zq, r);
  append(c.coords, v, r);
  append(c.coords, u, r);
  // uv zeta^q = 1
  return c.substitute(Var::v, RatFunc(Cyclotomic::zeta(r, -q)) / u);
}

ParamSubtorus component_Cq(int r, int q) {
  const Character c = component_Cq_point(r, q);
  ParamSubtorus s;
  s.host = c.host;
  for (const auto& x : c.coords) {
    auto m = x.as_monomial();
    if (!m || m->second.v != 0) throw ArithmeticError("C_q coordinate is not a monomial in u");
    s.translation.push_back(m->first);
    s.exponents.push_back(m->second);
  }
  return s;
}

ParamSubtorus torus_T(int r) {
  check_r(r);
  ParamSubtorus s;
  s.host = deletion_name(r);
  s.exponents = {Exponent{r, 0}, Exponent{-r, 0}};
  append(s.exponents, Exponent{0, 0}, r);
  append(s.exponents, Exponent{-1, 0}, r);
  append(s.exponents, Exponent{1, 0}, r);
  s.translation.assign(s.exponents.size(), Cyclotomic(1));
  return s;
}

Character tau(int r, int q) {
  check_q(r, q);
  Character c{deletion_name(r), {RatFunc(1), RatFunc(1)}};
  append(c.coords, RatFunc(Cyclotomic::zeta(r, q)), r);
  append(c.coords, RatFunc(Cyclotomic::zeta(r, -q)), r);
  append(c.coords, RatFunc(1), r);
  return c;
}

long long translation_order(const ParamSubtorus& s) {
  long long l = 1;
  for (const auto& t : s.translation) {
    auto o = char_order(t);
    if (!o) throw std::invalid_argument("translation coordinate " + t.to_string() + " is not a root of unity");
    l = std::lcm(l, *o);
  }
  if (l == 1) return 1;
  if (s.dimension != 1) throw std::invalid_argument("translation_order supports one-parameter subtori only");
  // If tau^k = u0^e then u0^g has order dividing l, where g is the gcd of the
  // exponents, so u0 is an (l*g)-th root of unity.
  long long g = 0;
  for (const auto& e : s.exponents) g = std::gcd(g, static_cast<long long>(std::abs(e.u)));
  const long long m = l * std::max(g, 1LL);
  if (m > kMaxConductor) throw ConductorError("translation_order: search conductor too large");
  for (long long k = 1; k <= l; ++k) {
    std::vector<Cyclotomic> target;
    for (const auto& t : s.translation) target.push_back(t.pow(k));
    for (long long i = 0; i < m; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < target.size() && ok; ++j) {
        const long long e = ((i * s.exponents[j].u) % m + m) % m;
        ok = target[j] == Cyclotomic::zeta(static_cast<int>(m), e);
      }
      if (ok) return k;
    }
  }
  return l;  // unreachable: tau^l = 1 lies on every subtorus
}

Character extend_character(const Character& t, const Triple& triple) {
  check_host(t, triple.deleted);
  Character out{triple.full.name(), t.coords};
  out.coords.insert(out.coords.begin() + triple.pivot, RatFunc(1));
  return out;
}

Character restrict_character(const Character& t, const Triple& triple) {
  check_host(t, triple.deleted);
  Character out{triple.restricted.name(), {}};
  for (const auto& members : triple.trace) {
    RatFunc p(1);
    for (int k : members) p *= t.coords[k];
    out.coords.push_back(p);
  }
  return out;
}

Character decone_character(const Character& t, const Arrangement& a, int pivot) {
  check_host(t, a);
  if (pivot < 0 || pivot >= static_cast<int>(a.size())) throw ArrangementError("invalid pivot");
  Character out{"decone(" + a.name() + "," + a[pivot].label + ")", t.coords};
  out.coords.erase(out.coords.begin() + pivot);
  return out;
}

bool is_essential(const Character& t) {
  return std::none_of(t.coords.begin(), t.coords.end(), [](const RatFunc& x) { return x.is_one(); });
}

bool is_essential(const ParamSubtorus& s) { return is_essential(s.point()); }

Triple monomial_triple(int r) {
  check_r(r);
  const Arrangement full = family("monomial_full", r);
  Triple tr = make_triple(full, 2);
  const Arrangement d = family("monomial_deletion", r);
  if (tr.deleted.labels() != d.labels()) throw ArrangementError("deletion of H3 does not match D_r");
  tr.deleted = tr.deleted.renamed(d.name());
  return tr;
}

}  // namespace hyperloc
