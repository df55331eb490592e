#include "hyperloc/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace hyperloc {

namespace detail {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<mpz_class> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(div.size()) - 1;
    const int dn = static_cast<int>(num.size()) - 1;
    std::vector<mpz_class> quot(dn - dd + 1, 0);
    for (int k = dn; k >= dd; --k) {
      mpz_class c = num[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (int i = 0; i <= dd; ++i) num[k - dd + i] -= c * div[i];
    }
    num = std::move(quot);
  }
  std::vector<long> out;
  out.reserve(num.size());
  for (const auto& c : num) {
    if (!c.fits_slong_p()) throw ArithmeticError("cyclotomic polynomial coefficient overflow");
    out.push_back(c.get_si());
  }
  return out;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::shared_mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<long>>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  std::vector<long> poly;
  if (n == 1) {
    poly = {-1, 1};
  } else {
    poly = compute_cyclotomic(n);
  }
  std::unique_lock lock(mutex);
  auto [it, inserted] =
      cache.emplace(n, std::make_unique<const std::vector<long>>(std::move(poly)));
  return *it->second;
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  if (t.empty()) throw std::invalid_argument("empty rational");
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && i == 0);
    if (!ok) throw std::invalid_argument("malformed rational '" + text + "'");
  }
  Rational q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(10); }

}  // namespace detail

namespace {

int checked_lcm(int a, int b) {
  long long l = std::lcm(static_cast<long long>(a), static_cast<long long>(b));
  if (l > kMaxConductor) {
    throw ConductorError("conductor " + std::to_string(l) + " exceeds cap " +
                         std::to_string(kMaxConductor));
  }
  return static_cast<int>(l);
}

void check_conductor(int n) {
  if (n < 1) throw ConductorError("conductor must be positive");
  if (n > kMaxConductor) {
    throw ConductorError("conductor " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kMaxConductor));
  }
}

// Reduces sum raw[i] x^i modulo (x^n - 1) and then modulo Phi_n.
std::vector<Rational> reduce(std::vector<Rational> raw, int n) {
  const auto& phi_poly = detail::cyclotomic_polynomial(n);
  const int phi = static_cast<int>(phi_poly.size()) - 1;
  if (static_cast<int>(raw.size()) > n) {
    for (std::size_t i = n; i < raw.size(); ++i) {
      if (raw[i] != 0) raw[i % n] += raw[i];
    }
    raw.resize(n);
  }
  for (int d = static_cast<int>(raw.size()) - 1; d >= phi; --d) {
    if (raw[d] == 0) continue;
    Rational c = raw[d];
    for (int i = 0; i < phi; ++i) {
      if (phi_poly[i] != 0) raw[d - phi + i] -= c * phi_poly[i];
    }
    raw[d] = 0;
  }
  raw.resize(phi, Rational(0));
  return raw;
}

// Univariate polynomials over Q used for inversion (ascending coefficients).
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly sub_mul(const QPoly& a, const QPoly& b, const QPoly& q) {
  // a - b*q
  QPoly out = a;
  if (!b.empty() && !q.empty()) {
    if (out.size() < b.size() + q.size() - 1) out.resize(b.size() + q.size() - 1, 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] == 0) continue;
      for (std::size_t j = 0; j < q.size(); ++j) out[i + j] -= b[i] * q[j];
    }
  }
  trim(out);
  return out;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

}  // namespace

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(long long value) : conductor_(1), coeffs_{Rational(static_cast<long>(value))} {}

Cyclotomic::Cyclotomic(const Rational& value) : conductor_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  shrink();
}

void Cyclotomic::shrink() {
  if (conductor_ == 1) return;
  bool rational = std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                              [](const Rational& c) { return c == 0; });
  if (rational) {
    coeffs_.resize(1);
    conductor_ = 1;
  }
}

Cyclotomic Cyclotomic::normalize(std::vector<Rational> raw, int conductor) {
  check_conductor(conductor);
  for (auto& c : raw) c.canonicalize();
  if (raw.empty()) return Cyclotomic();
  return Cyclotomic(conductor, reduce(std::move(raw), conductor));
}

Cyclotomic Cyclotomic::zeta(int conductor, long long k) {
  check_conductor(conductor);
  long long e = ((k % conductor) + conductor) % conductor;
  std::vector<Rational> raw(e + 1, Rational(0));
  raw[e] = 1;
  return Cyclotomic(conductor, reduce(std::move(raw), conductor));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_one() const {
  return coeffs_[0] == 1 &&
         std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Cyclotomic Cyclotomic::lift(int conductor) const {
  check_conductor(conductor);
  if (conductor == conductor_) return *this;
  if (conductor % conductor_ != 0) {
    throw ConductorError("cannot lift conductor " + std::to_string(conductor_) + " to " +
                         std::to_string(conductor));
  }
  if (conductor_ == 1) {
    std::vector<Rational> v(detail::euler_phi(conductor), Rational(0));
    v[0] = coeffs_[0];
    Cyclotomic out;
    out.conductor_ = conductor;
    out.coeffs_ = std::move(v);
    return out;
  }
  const int step = conductor / conductor_;
  std::vector<Rational> raw((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  Cyclotomic out;
  out.conductor_ = conductor;
  out.coeffs_ = reduce(std::move(raw), conductor);
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ == 1) return *this;
  std::vector<Rational> raw(conductor_, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    raw[(conductor_ - static_cast<int>(i)) % conductor_] += coeffs_[i];
  }
  return Cyclotomic(conductor_, reduce(std::move(raw), conductor_));
}

bool Cyclotomic::is_real() const { return conj() == *this; }

int Cyclotomic::real_sign() const {
  if (conductor_ == 1) return sgn(coeffs_[0]);
  if (!is_real()) throw ArithmeticError("real_sign of non-real cyclotomic " + to_string());
  if (is_zero()) return 0;
  // Nonzero, so enough precision eventually separates the value from zero.
  for (mpfr_prec_t prec = 128; prec <= 1 << 16; prec *= 2) {
    mpfr_t sum, term, angle, pi, bound, absq;
    mpfr_inits2(prec, sum, term, angle, pi, bound, absq, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(sum, 1);
    mpfr_set_zero(bound, 1);
    mpfr_const_pi(pi, MPFR_RNDN);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      mpfr_mul_ui(angle, pi, 2 * i, MPFR_RNDN);
      mpfr_div_ui(angle, angle, conductor_, MPFR_RNDN);
      mpfr_cos(term, angle, MPFR_RNDN);
      mpfr_mul_q(term, term, coeffs_[i].get_mpq_t(), MPFR_RNDN);
      mpfr_add(sum, sum, term, MPFR_RNDN);
      mpfr_set_q(absq, coeffs_[i].get_mpq_t(), MPFR_RNDU);
      mpfr_abs(absq, absq, MPFR_RNDU);
      mpfr_add(bound, bound, absq, MPFR_RNDU);
    }
    // Each term carries a few ulps of error; scale the coefficient mass.
    mpfr_mul_ui(bound, bound, 16 * (coeffs_.size() + 1), MPFR_RNDU);
    mpfr_mul_2si(bound, bound, -static_cast<long>(prec) + 4, MPFR_RNDU);
    mpfr_abs(absq, sum, MPFR_RNDN);
    int result = 0;
    if (mpfr_cmp(absq, bound) > 0) result = mpfr_sgn(sum) > 0 ? 1 : -1;
    mpfr_clears(sum, term, angle, pi, bound, absq, static_cast<mpfr_ptr>(nullptr));
    if (result != 0) return result;
  }
  throw ArithmeticError("real_sign: precision exhausted");
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero cyclotomic");
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Extended Euclid: s*a + t*Phi = g (a nonzero constant).
  const auto& phi_ll = detail::cyclotomic_polynomial(conductor_);
  QPoly modulus(phi_ll.begin(), phi_ll.end());
  QPoly a = coeffs_;
  trim(a);
  QPoly r0 = modulus, r1 = a;
  QPoly s0{}, s1{Rational(1)};
  while (!r1.empty() && r1.size() > 1) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s2 = sub_mul(s0, s1, q);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw ArithmeticError("non-invertible cyclotomic (internal)");
  Rational g = r1[0];
  for (auto& c : s1) c /= g;
  return Cyclotomic(conductor_, reduce(std::move(s1), conductor_));
}

Cyclotomic Cyclotomic::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (conductor_ == rhs.conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    shrink();
    return *this;
  }
  int n = checked_lcm(conductor_, rhs.conductor_);
  Cyclotomic a = lift(n);
  Cyclotomic b = rhs.lift(n);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.shrink();
  *this = std::move(a);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.conductor_ == 1) {
    if (rhs.coeffs_[0] == 0) {
      *this = Cyclotomic();
      return *this;
    }
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (conductor_ == 1) {
    Rational c = coeffs_[0];
    *this = rhs;
    if (c == 0) {
      *this = Cyclotomic();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  int n = checked_lcm(conductor_, rhs.conductor_);
  const Cyclotomic a = lift(n);
  const Cyclotomic b = rhs.lift(n);
  std::vector<Rational> raw(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] != 0) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  conductor_ = n;
  coeffs_ = reduce(std::move(raw), n);
  shrink();
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  int n = std::lcm(a.conductor_, b.conductor_);
  if (n > kMaxConductor) return false;
  return a.lift(n).coeffs_ == b.lift(n).coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (conductor_ == 1) return detail::rational_to_string(coeffs_[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << detail::rational_to_string(mag);
      continue;
    }
    if (mag != 1) out << detail::rational_to_string(mag) << "*";
    out << "zeta(" << conductor_ << ")";
    if (i != 1) out << "^" << i;
  }
  return out.str();
}

std::optional<long long> char_order(const Cyclotomic& a) {
  if (a.is_zero()) throw ArithmeticError("char_order of zero");
  const long long n = a.conductor();
  // Roots of unity in Q(zeta_n) have order dividing lcm(2, n).
  const long long bound = std::lcm(2LL, n);
  if (!a.pow(bound).is_one()) return std::nullopt;
  for (long long d = 1; d <= bound; ++d) {
    if (bound % d == 0 && a.pow(d).is_one()) return d;
  }
  return bound;
}

Cyclotomic parse_cyclotomic(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw std::invalid_argument("empty cyclotomic literal");
  Cyclotomic result(1);
  bool negate = false;
  std::size_t pos = 0;
  if (t[pos] == '-' || t[pos] == '+') {
    negate = t[pos] == '-';
    ++pos;
  }
  while (pos <= t.size()) {
    std::size_t star = t.find('*', pos);
    std::string factor = t.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    if (factor.empty()) throw std::invalid_argument("malformed cyclotomic literal '" + text + "'");
    if (factor.rfind("zeta(", 0) == 0) {
      std::size_t close = factor.find(')');
      if (close == std::string::npos) throw std::invalid_argument("unclosed zeta( in '" + text + "'");
      int n = std::stoi(factor.substr(5, close - 5));
      long long e = 1;
      if (close + 1 < factor.size()) {
        if (factor[close + 1] != '^') throw std::invalid_argument("bad zeta power in '" + text + "'");
        e = std::stoll(factor.substr(close + 2));
      }
      result *= Cyclotomic::zeta(n, e);
    } else {
      result *= Cyclotomic(detail::parse_rational(factor));
    }
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return negate ? -result : result;
}

}  // namespace hyperloc
