#include "hyperloc/ratfunc.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperloc {

// ---------------------------------------------------------------- Poly

Poly::Poly(const Cyclotomic& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, c);
}

Poly Poly::monomial(const Cyclotomic& c, int eu, int ev) {
  if (eu < 0 || ev < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(Exponent{eu, ev}, c);
  return p;
}

Poly Poly::var(Var x) {
  return x == Var::u ? monomial(Cyclotomic(1), 1, 0) : monomial(Cyclotomic(1), 0, 1);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Cyclotomic Poly::constant_term() const {
  auto it = terms_.find(Exponent{0, 0});
  return it == terms_.end() ? Cyclotomic() : it->second;
}

int Poly::degree(Var x) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, x == Var::u ? e.u : e.v);
  return d;
}

int Poly::min_degree(Var x) const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, x == Var::u ? e.u : e.v);
  return d;
}

Poly Poly::u_coeff(int k) const {
  Poly out;
  auto it = terms_.lower_bound(Exponent{k, 0});
  for (; it != terms_.end() && it->first.u == k; ++it) {
    out.terms_.emplace(Exponent{0, it->first.v}, it->second);
  }
  return out;
}

void Poly::add_term(const Exponent& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(Exponent{ea.u + eb.u, ea.v + eb.v}, ca * cb);
    }
  }
  return out;
}

Poly Poly::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return Poly();
  Poly out = *this;
  for (auto& [e, x] : out.terms_) x *= c;
  return out;
}

Poly Poly::shifted(int du, int dv) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    if (e.u + du < 0 || e.v + dv < 0) throw std::invalid_argument("Poly::shifted: negative exponent");
    out.terms_.emplace_hint(out.terms_.end(), Exponent{e.u + du, e.v + dv}, c);
  }
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

int Poly::conductor() const {
  int n = 1;
  for (const auto& [e, c] : terms_) n = std::lcm(n, c.conductor());
  return n;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << " + ";
    first = false;
    bool unit = c.is_one();
    bool bare = e.u == 0 && e.v == 0;
    if (!unit || bare) out << (c.is_rational() ? c.to_string() : "(" + c.to_string() + ")");
    if (!bare && !unit) out << "*";
    if (e.u > 0) out << "u" << (e.u > 1 ? "^" + std::to_string(e.u) : "");
    if (e.u > 0 && e.v > 0) out << "*";
    if (e.v > 0) out << "v" << (e.v > 1 ? "^" + std::to_string(e.v) : "");
  }
  return out.str();
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a.scaled(b.constant_term().inverse());
  const Exponent lb = b.leading_exponent();
  const Cyclotomic lc_inv = b.leading_coeff().inverse();
  Poly q;
  Poly r = a;
  while (!r.is_zero()) {
    const Exponent lr = r.leading_exponent();
    if (lr.u < lb.u || lr.v < lb.v) return std::nullopt;
    Poly t = Poly::monomial(r.leading_coeff() * lc_inv, lr.u - lb.u, lr.v - lb.v);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

bool univariate_in_v(const Poly& p) { return p.degree(Var::u) == 0; }

// Remainder of a by b, both polynomials in v only.
Poly rem_v(Poly a, const Poly& b) {
  const int db = b.degree(Var::v);
  const Cyclotomic lc_inv = b.leading_coeff().inverse();
  while (!a.is_zero() && a.degree(Var::v) >= db) {
    const int da = a.degree(Var::v);
    a -= b.shifted(0, da - db).scaled(a.leading_coeff() * lc_inv);
  }
  return a;
}

Poly gcd_v(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = rem_v(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly content_u(const Poly& p) {
  Poly g;
  const int d = p.degree(Var::u);
  for (int k = d; k >= 0; --k) {
    Poly c = p.u_coeff(k);
    if (c.is_zero()) continue;
    g = gcd_v(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Poly c = content_u(p);
  auto q = exact_divide(p, c);
  if (!q) throw ArithmeticError("primitive_part: content does not divide");
  return *q;
}

// Pseudo-remainder of a by b with respect to u.
Poly prem_u(Poly a, const Poly& b) {
  const int db = b.degree(Var::u);
  const Poly lcb = b.u_coeff(db);
  while (!a.is_zero() && a.degree(Var::u) >= db) {
    const int da = a.degree(Var::u);
    Poly lca = a.u_coeff(da);
    a = lcb * a - lca * b.shifted(da - db, 0);
  }
  return a;
}

Poly monomial_gcd(const Poly& a, const Poly& b) {
  int mu = std::min(a.min_degree(Var::u), b.min_degree(Var::u));
  int mv = std::min(a.min_degree(Var::v), b.min_degree(Var::v));
  return Poly::monomial(Cyclotomic(1), mu, mv);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_monomial() || b.is_monomial()) return monomial_gcd(a, b);
  if (univariate_in_v(a) && univariate_in_v(b)) return gcd_v(a, b);

  Poly ca = content_u(a);
  Poly cb = content_u(b);
  Poly g = gcd_v(ca, cb);
  Poly pa = *exact_divide(a, ca);
  Poly pb = *exact_divide(b, cb);
  if (pa.degree(Var::u) < pb.degree(Var::u)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = prem_u(pa, pb);
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  // pa is primitive in u; a u-free primitive polynomial is a unit.
  if (pa.degree(Var::u) == 0) return g.monic();
  return (g * pa).monic();
}

// ------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *exact_divide(num_, g);
      den_ = *exact_divide(den_, g);
    }
  }
  const Cyclotomic& lc = den_.leading_coeff();
  if (!lc.is_one()) {
    Cyclotomic inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::monomial(const Cyclotomic& c, int eu, int ev) {
  Poly num = Poly::monomial(c, std::max(eu, 0), std::max(ev, 0));
  Poly den = Poly::monomial(Cyclotomic(1), std::max(-eu, 0), std::max(-ev, 0));
  return RatFunc(std::move(num), std::move(den));
}

bool RatFunc::is_one() const { return den_.is_constant() && num_.is_constant() && num_ == den_; }

std::optional<Cyclotomic> RatFunc::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_term();
}

std::optional<std::pair<Cyclotomic, Exponent>> RatFunc::as_monomial() const {
  if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
  const auto& [en, cn] = *num_.terms().begin();
  const auto& [ed, cd] = *den_.terms().begin();
  return std::make_pair(cn / cd, Exponent{en.u - ed.u, en.v - ed.v});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero rational function");
  RatFunc out;
  out.num_ = den_;
  out.den_ = num_;
  // Already coprime; only the leading coefficient needs fixing.
  const Cyclotomic& lc = out.den_.leading_coeff();
  if (!lc.is_one()) {
    Cyclotomic inv = lc.inverse();
    out.num_ = out.num_.scaled(inv);
    out.den_ = out.den_.scaled(inv);
  }
  return out;
}

RatFunc RatFunc::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  if (auto m = as_monomial()) {
    return monomial(m->first.pow(e), static_cast<int>(m->second.u * e),
                    static_cast<int>(m->second.v * e));
  }
  RatFunc out;
  out.num_ = num_.pow(static_cast<unsigned>(e));
  out.den_ = den_.pow(static_cast<unsigned>(e));
  out.normalize();
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_zero() || rhs.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) { return *this *= rhs.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

namespace {

RatFunc substitute_poly(const Poly& p, Var x, const RatFunc& value) {
  RatFunc result;
  std::map<int, RatFunc> powers;
  auto power = [&](int e) -> const RatFunc& {
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
    return it->second;
  };
  for (const auto& [e, c] : p.terms()) {
    const int ex = x == Var::u ? e.u : e.v;
    Poly rest = x == Var::u ? Poly::monomial(c, 0, e.v) : Poly::monomial(c, e.u, 0);
    result += RatFunc(rest) * power(ex);
  }
  return result;
}

}  // namespace

RatFunc RatFunc::substitute(Var x, const RatFunc& value) const {
  if (!depends_on(x)) return *this;
  return substitute_poly(num_, x, value) / substitute_poly(den_, x, value);
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_term().is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace hyperloc
