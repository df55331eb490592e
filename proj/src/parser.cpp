#include <cctype>
#include <map>
#include <numeric>

#include "hyperloc/arrangement.hpp"

namespace hyperloc {

namespace {

struct Term {
  Cyclotomic coeff{1};
  std::map<int, int> exps;  // variable index -> exponent

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : exps) d += e;
    return d;
  }
};

class Parser {
 public:
  Parser(const std::string& text, std::optional<int> dim) : s_(text), dim_(dim) {}

  Arrangement run() {
    skip();
    if (at_end()) throw ParseError("empty defining polynomial");
    while (true) {
      top_factor();
      skip();
      if (at_end()) break;
      if (peek() == '*') {
        ++pos_;
        skip();
      }
    }
    int dim = max_var_;
    if (dim_) {
      if (*dim_ < max_var_) {
        throw ParseError("dimension " + std::to_string(*dim_) + " is smaller than variable x" +
                         std::to_string(max_var_));
      }
      dim = *dim_;
    }
    std::vector<Hyperplane> hs;
    for (auto& f : forms_) {
      Hyperplane h{f.label, std::vector<Cyclotomic>(dim, Cyclotomic()), f.constant};
      for (const auto& [v, c] : f.coeffs) h.normal[v - 1] = c;
      hs.push_back(std::move(h));
    }
    return Arrangement(s_, dim, std::move(hs), conductor_);
  }

 private:
  struct Form {
    std::string label;
    std::map<int, Cyclotomic> coeffs;
    Cyclotomic constant;
  };

  const std::string& s_;
  std::optional<int> dim_;
  std::size_t pos_ = 0;
  int max_var_ = 0;
  int conductor_ = 1;
  std::vector<Form> forms_;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_ + 1) + " in '" + s_ + "'");
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long long integer() {
    skip();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    if (peek() == '(') {
      ++pos_;
      long long v = integer();
      expect(')');
      return neg ? -v : v;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000LL) fail("integer too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  int optional_power() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    long long e = integer();
    if (e < 1) fail("exponent must be positive");
    return static_cast<int>(e);
  }

  bool starts_atom() const {
    char c = peek();
    return c == 'x' || c == 'z' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  int variable() {
    ++pos_;  // 'x'
    if (peek() == '_') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
    long long i = integer();
    if (i < 1) fail("variable indices start at 1");
    max_var_ = std::max(max_var_, static_cast<int>(i));
    return static_cast<int>(i);
  }

  // Numeric atom: integer, or zeta(N) with optional integer power.
  Cyclotomic number() {
    if (s_.compare(pos_, 5, "zeta(") == 0) {
      pos_ += 5;
      long long n = integer();
      expect(')');
      if (n < 1) fail("zeta conductor must be positive");
      long long k = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        k = integer();
      }
      return Cyclotomic::zeta(static_cast<int>(n), k);
    }
    return Cyclotomic(integer());
  }

  // term := atom ( ('*' | '/') atom )*, atoms being numbers or variables.
  Term term() {
    Term t;
    while (true) {
      skip();
      if (peek() == 'x') {
        int v = variable();
        t.exps[v] += optional_power();
      } else if (peek() == 'z' || std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coeff *= number();
      } else {
        fail("expected a number or variable");
      }
      skip();
      if (peek() == '*') {
        ++pos_;
      } else if (peek() == '/') {
        ++pos_;
        skip();
        Cyclotomic d = number();
        if (d.is_zero()) fail("division by zero");
        t.coeff /= d;
      } else if (peek() == 'x' || peek() == 'z') {
        continue;  // juxtaposition
      } else {
        return t;
      }
    }
  }

  std::vector<Term> sum() {
    std::map<std::map<int, int>, Cyclotomic> acc;
    std::vector<std::map<int, int>> order;
    bool first = true;
    while (true) {
      skip();
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = peek() == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      Term t = term();
      if (neg) t.coeff = -t.coeff;
      auto [it, inserted] = acc.emplace(t.exps, Cyclotomic());
      if (inserted) order.push_back(t.exps);
      it->second += t.coeff;
    }
    std::vector<Term> out;
    for (const auto& e : order) {
      if (acc[e].is_zero()) continue;
      out.push_back(Term{acc[e], e});
    }
    return out;
  }

  void add_linear(const std::vector<Term>& terms) {
    Form f;
    for (const auto& t : terms) {
      if (t.exps.empty()) {
        f.constant = t.coeff;
      } else {
        f.coeffs[t.exps.begin()->first] = t.coeff;
      }
    }
    if (f.coeffs.size() == 1 && f.constant.is_zero()) {
      f.label = "H" + std::to_string(f.coeffs.begin()->first);
    } else {
      f.label = "L" + std::to_string(forms_.size() + 1);
    }
    forms_.push_back(std::move(f));
  }

  void add_factor(const std::vector<Term>& terms, int power) {
    if (terms.empty()) fail("zero factor");
    int maxdeg = 0;
    for (const auto& t : terms) maxdeg = std::max(maxdeg, t.degree());
    if (maxdeg == 0) return;  // nonzero scalar
    if (power > 1) throw DuplicateHyperplaneError("repeated factor in '" + s_ + "'");
    if (maxdeg == 1) {
      add_linear(terms);
      return;
    }
    // x_i^r - x_j^r, up to a common scalar.
    if (terms.size() == 2 && terms[0].exps.size() == 1 && terms[1].exps.size() == 1) {
      auto [i, ri] = *terms[0].exps.begin();
      auto [j, rj] = *terms[1].exps.begin();
      if (i != j && ri == rj && terms[0].coeff == -terms[1].coeff) {
        const int r = ri;
        if (r > kMaxConductor) fail("power too large");
        conductor_ = std::lcm(conductor_, r);
        for (int k = 1; k <= r; ++k) {
          Form f;
          f.label = "H" + std::to_string(i) + std::to_string(j) + ":" + std::to_string(k);
          f.coeffs[i] = Cyclotomic(1);
          f.coeffs[j] = -Cyclotomic::zeta(r, k);
          forms_.push_back(std::move(f));
        }
        return;
      }
    }
    fail("nonlinear factor that is not a difference of equal powers");
  }

  void top_factor() {
    skip();
    if (peek() == '(') {
      ++pos_;
      auto terms = sum();
      expect(')');
      add_factor(terms, optional_power());
    } else if (peek() == 'x') {
      int v = variable();
      add_factor({Term{Cyclotomic(1), {{v, 1}}}}, optional_power());
    } else if (peek() == 'z' || std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-') {
      bool neg = peek() == '-';
      if (neg) ++pos_;
      Cyclotomic c = number();
      if (c.is_zero()) fail("zero factor");
      optional_power();
    } else {
      fail("unexpected character");
    }
  }
};

}  // namespace

Arrangement parse_defining_polynomial(const std::string& text, std::optional<int> dim) {
  return Parser(text, dim).run();
}

}  // namespace hyperloc
