#ifndef HYPERLOC_RATFUNC_HPP
#define HYPERLOC_RATFUNC_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperloc/cyclotomic.hpp"

namespace hyperloc {

/// The two symbolic parameters. Every parametrized family in the library is
/// written in u and v only.
enum class Var { u, v };

struct Exponent {
  int u = 0;
  int v = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Polynomial in u, v with cyclotomic coefficients; exponents are
/// nonnegative. Terms are ordered lexicographically with u > v.
class Poly {
 public:
  using Terms = std::map<Exponent, Cyclotomic>;

  Poly() = default;
  Poly(const Cyclotomic& c);  // NOLINT(google-explicit-constructor)
  Poly(long long c) : Poly(Cyclotomic(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Cyclotomic& c, int eu, int ev);
  static Poly var(Var x);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Cyclotomic constant_term() const;
  int degree(Var x) const;
  int min_degree(Var x) const;
  bool depends_on(Var x) const { return degree(x) > 0; }
  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  const Cyclotomic& leading_coeff() const { return terms_.rbegin()->second; }

  /// Coefficient of u^k as a polynomial in v alone.
  Poly u_coeff(int k) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Cyclotomic& c) const;
  Poly shifted(int du, int dv) const;
  Poly pow(unsigned e) const;
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Smallest conductor holding every coefficient.
  int conductor() const;
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Cyclotomic& c);
  Terms terms_;
};

/// a / b when b divides a exactly, nullopt otherwise.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);
/// Monic gcd over Q(zeta)[u, v]; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Element of Q(zeta_N)(u, v), kept as num/den with gcd(num, den) = 1 and
/// the leading coefficient of den equal to 1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Cyclotomic& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long long c) : RatFunc(Cyclotomic(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);

  static RatFunc var(Var x) { return RatFunc(Poly::var(x)); }
  /// c * u^eu * v^ev, exponents of any sign.
  static RatFunc monomial(const Cyclotomic& c, int eu, int ev);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<Cyclotomic> constant_value() const;
  bool depends_on(Var x) const { return num_.depends_on(x) || den_.depends_on(x); }

  /// If this is c * u^a * v^b (a, b any sign) returns (c, {a, b}).
  std::optional<std::pair<Cyclotomic, Exponent>> as_monomial() const;

  RatFunc inverse() const;
  RatFunc pow(long long e) const;
  /// Replaces x by `value` everywhere.
  RatFunc substitute(Var x, const RatFunc& value) const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);
  RatFunc operator-() const;
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace hyperloc

#endif  // HYPERLOC_RATFUNC_HPP
