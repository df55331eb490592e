#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "hyperloc/kernels/bareiss.hpp"
#include "hyperloc/matrix.hpp"
#include "hyperloc/ratfunc.hpp"
#include "oracles.hpp"

using namespace hyperloc;

namespace {

std::complex<double> eval(const Cyclotomic& c) {
  std::complex<double> z = 0;
  const double n = c.conductor();
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    z += c.coeffs()[k].get_d() * std::polar(1.0, 2 * M_PI * static_cast<double>(k) / n);
  }
  return z;
}

// Integer polynomial long division, exact.
std::vector<long> divide(std::vector<long> num, const std::vector<long>& den) {
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = num[i + den.size() - 1] / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  return q;
}

Cyclotomic random_cyclo(std::mt19937& g, int n) {
  std::uniform_int_distribution<int> d(-5, 5);
  Cyclotomic c;
  for (int k = 0; k < n; ++k) c += Cyclotomic(Rational(d(g), 1 + std::abs(d(g)))) * Cyclotomic::zeta(n, k);
  return c;
}

Poly random_poly(std::mt19937& g, int deg) {
  std::uniform_int_distribution<int> d(-3, 3);
  Poly p;
  for (int k = 0; k <= deg; ++k) p += Poly::monomial(Cyclotomic(d(g)), k, 0);
  return p;
}

}  // namespace

TEST_SUITE("exact-algebra") {

TEST_CASE("cyclotomic polynomials agree with x^n - 1 divided by lower ones") {
  std::vector<std::vector<long>> phi(31);
  for (int n = 1; n <= 30; ++n) {
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d == 0) p = divide(p, phi[d]);
    }
    phi[n] = p;
    CHECK(detail::cyclotomic_polynomial(n) == p);
    int count = 0;
    for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    CHECK(detail::euler_phi(n) == count);
  }
}

TEST_CASE("roots of unity have the expected orders") {
  for (int n = 1; n <= 24; ++n) {
    for (int k = 0; k < n; ++k) {
      const Cyclotomic z = Cyclotomic::zeta(n, k);
      CHECK(z.pow(n).is_one());
      CHECK(char_order(z) == n / std::gcd(n, k));
      CHECK(z.conj() == z.inverse());
    }
  }
  CHECK(Cyclotomic::zeta(4, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(6, 3) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(12, 4) == Cyclotomic::zeta(3, 1));
  CHECK(char_order(Cyclotomic(2)) == std::nullopt);
}

TEST_CASE("field operations match complex evaluation") {
  std::mt19937 g(7);
  for (int n : {1, 3, 4, 5, 8, 12, 15}) {
    for (int trial = 0; trial < 8; ++trial) {
      const Cyclotomic a = random_cyclo(g, n);
      const Cyclotomic b = random_cyclo(g, n);
      CHECK(std::abs(eval(a * b) - eval(a) * eval(b)) < 1e-9);
      CHECK(std::abs(eval(a + b) - (eval(a) + eval(b))) < 1e-9);
      if (!b.is_zero()) {
        CHECK((a / b) * b == a);
        CHECK(b * b.inverse() == Cyclotomic(1));
      }
      const Cyclotomic re = a + a.conj();
      CHECK(re.is_real());
      const double x = eval(re).real();
      if (std::abs(x) > 1e-6) CHECK(re.real_sign() == (x > 0 ? 1 : -1));
    }
  }
}

TEST_CASE("mixed conductors lift to the lcm") {
  const Cyclotomic s = Cyclotomic::zeta(4) + Cyclotomic::zeta(6);
  CHECK(s.conductor() == 12);
  CHECK(std::abs(eval(s) - (std::polar(1.0, M_PI / 2) + std::polar(1.0, M_PI / 3))) < 1e-12);
  CHECK_THROWS_AS(Cyclotomic::zeta(2048), ConductorError);
  CHECK_THROWS_AS(Cyclotomic().inverse(), ArithmeticError);
}

TEST_CASE("cyclotomic literals") {
  CHECK(parse_cyclotomic("zeta(5)^2") == Cyclotomic::zeta(5, 2));
  CHECK(parse_cyclotomic("-3/4") == Cyclotomic(Rational(-3, 4)));
  CHECK_THROWS(parse_cyclotomic("zeta(5"));
}

TEST_CASE("rational functions normalize to lowest terms") {
  const RatFunc u = RatFunc::var(Var::u);
  const RatFunc v = RatFunc::var(Var::v);
  const RatFunc f = (u + 1) * (u + 1) / (u + 1);
  CHECK(f == u + 1);
  CHECK(((u * u - 1) / (u - 1)) == u + 1);
  CHECK((u / v) * (v / u) == RatFunc(1));
  CHECK((u.pow(3) / u.pow(5)) == u.pow(-2));
  CHECK((u * v).substitute(Var::v, u.inverse()).is_one());
  const auto m = (RatFunc(Cyclotomic::zeta(3)) * u.pow(2) / v).as_monomial();
  REQUIRE(m);
  CHECK(m->first == Cyclotomic::zeta(3));
  CHECK(m->second == Exponent{2, -1});
  CHECK_FALSE((u + 1).as_monomial());
}

TEST_CASE("polynomial gcd and exact division") {
  std::mt19937 g(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Poly a = random_poly(g, 3), b = random_poly(g, 2), c = random_poly(g, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const auto q = exact_divide(a * b, b);
    REQUIRE(q);
    CHECK(*q == a);
    const Poly d = gcd(a * c, b * c);
    CHECK(exact_divide(a * c, d));
    CHECK(exact_divide(b * c, d));
    CHECK(exact_divide(d, c.monic()));
  }
}

TEST_CASE("fraction-free rank matches specialized ranks") {
  std::mt19937 g(3);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t rows = 4, cols = 5, inner = 1 + trial % 4;
    std::vector<std::vector<Poly>> l(rows, std::vector<Poly>(inner)), rt(inner, std::vector<Poly>(cols));
    for (auto& row : l) for (auto& x : row) x = random_poly(g, 2);
    for (auto& row : rt) for (auto& x : row) x = random_poly(g, 2);
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        Poly s;
        for (std::size_t k = 0; k < inner; ++k) s += l[i][k] * rt[k][j];
        m(i, j) = RatFunc(s);
      }
    }
    std::size_t best = 0;
    for (int x = -6; x <= 6; ++x) {
      std::vector<std::vector<Cyclotomic>> num(rows, std::vector<Cyclotomic>(cols));
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          num[i][j] = *m(i, j).substitute(Var::u, RatFunc(x)).constant_value();
        }
      }
      best = std::max(best, oracle::rank(num));
    }
    const std::size_t r = rank_ff(m);
    CHECK(r == best);
    CHECK(r <= inner);
    const PolyMatrix cleared = clear_denominators(m);
    CHECK(kernels::bareiss_rank_serial(cleared) == r);
    CHECK(kernels::bareiss_rank_omp(cleared) == r);
  }
}

TEST_CASE("rank over a cyclotomic field") {
  const Cyclotomic z = Cyclotomic::zeta(3);
  CycloMatrix m{{1, z, z * z}, {z, z * z, 1}, {1, 1, 1}};
  CHECK(rank_cyclotomic(m) == oracle::rank(m));
  CHECK(rank_cyclotomic(m) == 2);
}

}

TEST_SUITE("exact-algebra") {

TEST_CASE("small cyclotomic identities") {
  CHECK(Cyclotomic::zeta(2) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(2).is_rational());
  CHECK((Cyclotomic(1) + Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2)).is_zero());
  CHECK(Cyclotomic::zeta(12).pow(6) == Cyclotomic(-1));
  CHECK(char_order(Cyclotomic(1)) == 1);
  CHECK(char_order(Cyclotomic::zeta(6)) == 6);
  CHECK(char_order(Cyclotomic(2)) == std::nullopt);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 g(17);
  const RatFunc u = RatFunc::var(Var::u), v = RatFunc::var(Var::v);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 6;
    const Cyclotomic a = random_cyclo(g, n), b = random_cyclo(g, n + 1), c = random_cyclo(g, 2 * n);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    if (!c.is_zero()) CHECK(c * c.inverse() == Cyclotomic(1));
    const RatFunc x = RatFunc(random_poly(g, 2)) + u * v;
    const RatFunc y = RatFunc(a) * v + u.pow(2);
    const RatFunc z = (u - RatFunc(b)) / (v + 2);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) * z == x * z + y * z);
    CHECK(z * z.inverse() == RatFunc(1));
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("small ranks") {
  const RatFunc u = RatFunc::var(Var::u);
  ExactMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
  CHECK(rank_ff(id) == 3);
  ExactMatrix m(2, 2);
  m(0, 0) = u;
  m(0, 1) = 1;
  m(1, 0) = u * u;
  m(1, 1) = u;
  CHECK(rank_ff(m) == 1);
}

TEST_CASE("rank is invariant under permutations and row scaling") {
  std::mt19937 g(23);
  const RatFunc u = RatFunc::var(Var::u);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t rows = 5, cols = 4;
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = RatFunc(random_poly(g, 2)) / (u + 3);
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m(3, j) = m(0, j) * u + m(1, j);
      m(4, j) = m(2, j) - m(1, j) * 2;
    }
    const std::size_t r = rank_ff(m);
    std::vector<std::size_t> pr{4, 2, 0, 3, 1}, pc{3, 1, 0, 2};
    ExactMatrix p(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) p(i, j) = m(pr[i], pc[j]) * (i == 2 ? (u * u + 1) / (u - 5) : RatFunc(1));
    }
    CHECK(rank_ff(p) == r);
    CHECK(r <= 3);
  }
}

TEST_CASE("specialized rank never exceeds the symbolic rank") {
  std::mt19937 g(29);
  const RatFunc u = RatFunc::var(Var::u);
  ExactMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = RatFunc(random_poly(g, 3)) + (i == j ? u.pow(2) : RatFunc(0));
  }
  const std::size_t r = rank_ff(m);
  const PolyMatrix cleared = clear_denominators(m);
  std::size_t best = 0;
  for (int k = 1; k <= 20; ++k) {
    CycloMatrix c;
    for (const auto& row : specialize(cleared, Var::u, RatFunc(Cyclotomic::zeta(41, k)))) {
      c.emplace_back();
      for (const auto& x : row) c.back().push_back(x.constant_term());
    }
    const std::size_t s = rank_cyclotomic(c);
    CHECK(s <= r);
    best = std::max(best, s);
  }
  CHECK(best == r);
}

}
