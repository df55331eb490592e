#ifndef HYPERLOC_CYCLOTOMIC_HPP
#define HYPERLOC_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperloc {

using Rational = mpq_class;

/// Largest conductor accepted by Cyclotomic. Power-basis vectors have
/// length phi(N), so this keeps every element desk-scale.
inline constexpr int kMaxConductor = 1024;

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConductorError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

namespace detail {
int euler_phi(int n);
/// Coefficients (ascending) of the n-th cyclotomic polynomial; monic of
/// degree phi(n). Cached, safe to call concurrently.
const std::vector<long>& cyclotomic_polynomial(int n);
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);
}  // namespace detail

/// An element of Q(zeta_N), stored on the power basis 1, zeta, ...,
/// zeta^(phi(N)-1) modulo the N-th cyclotomic polynomial.
///
/// Rational values always carry conductor 1. Mixed arithmetic lifts both
/// operands to the lcm of their conductors.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Canonical representative of sum raw[i] * zeta_N^i. `raw` may have any
  /// length; exponents are taken mod N.
  static Cyclotomic normalize(std::vector<Rational> raw, int conductor);
  /// zeta_N^k = exp(2 pi i k / N), any integer k.
  static Cyclotomic zeta(int conductor, long long k = 1);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return conductor_ == 1; }
  /// Only meaningful when is_rational().
  const Rational& rational_value() const { return coeffs_.front(); }

  Cyclotomic lift(int conductor) const;
  Cyclotomic conj() const;
  bool is_real() const;
  /// Sign of a real element (-1, 0, 1). Throws for non-real input.
  int real_sign() const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long long e) const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Human readable form, e.g. "1/2 - zeta(6)^1".
  std::string to_string() const;

 private:
  Cyclotomic(int conductor, std::vector<Rational> coeffs);
  void shrink();

  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Multiplicative order of a root of unity, or nullopt if `a` is not one.
/// Throws ArithmeticError on zero.
std::optional<long long> char_order(const Cyclotomic& a);

/// Parses "3", "-2/5", "zeta(6)", "zeta(6)^-2", "-3/2*zeta(4)^3".
Cyclotomic parse_cyclotomic(const std::string& text);

}  // namespace hyperloc

#endif  // HYPERLOC_CYCLOTOMIC_HPP
