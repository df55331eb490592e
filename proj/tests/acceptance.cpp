#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "hyperloc/certificate.hpp"
#include "hyperloc/fox.hpp"
#include "hyperloc/report.hpp"
#include "oracles.hpp"

using namespace hyperloc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int k, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s > limit_seconds) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
  }
  if (!o.pass) ++failures;
  std::printf("criterion %d: %s  %s  [%.2f s / %.0f s]%s%s\n", k, o.pass ? "PASS" : "FAIL", title.c_str(), s,
              limit_seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

void require(Outcome& o, bool ok, const std::string& what) {
  if (ok) return;
  o.pass = false;
  o.detail += (o.detail.empty() ? "" : "; ") + what;
}

std::vector<long long> shift_add(std::vector<long long> a, const std::vector<long long>& b) {
  a.resize(std::max(a.size(), b.size() + 1), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + 1] += b[k];
  return a;
}

std::vector<std::string> labels(const Arrangement& a, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(a[i].label);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::stoi(argv[1]) : 5;

  criterion(1, "family sizes 3r+3 and 3r+2, parser agrees label for label, r = 2..6", 1.0, [] {
    Outcome o;
    for (int r = 2; r <= 6; ++r) {
      const Arrangement a = family("monomial_full", r), d = family("monomial_deletion", r);
      const std::string rs = " (r=" + std::to_string(r) + ")";
      require(o, a.size() == static_cast<std::size_t>(3 * r + 3), "|A_r|" + rs);
      require(o, d.size() == static_cast<std::size_t>(3 * r + 2), "|D_r|" + rs);
      require(o, parse_defining_polynomial(monomial_polynomial(r, false)).labels() == a.labels(), "A_r labels" + rs);
      require(o, parse_defining_polynomial(monomial_polynomial(r, true)).labels() == d.labels(), "D_r labels" + rs);
    }
    return o;
  });

  criterion(2, "deletion-restriction at H3: Poincare and Euler identities, r+2 traces, r = 2..5", 5.0, [] {
    Outcome o;
    for (int r = 2; r <= 5; ++r) {
      const std::string rs = " (r=" + std::to_string(r) + ")";
      const Triple tr = monomial_triple(r);
      require(o, tr.full[tr.pivot].label == "H3", "pivot" + rs);
      const auto pa = poincare_polynomial(tr.full), pd = poincare_polynomial(tr.deleted),
                 pr = poincare_polynomial(tr.restricted);
      require(o, pa == shift_add(pd, pr), "pi identity" + rs);
      require(o, euler_characteristic(pa) == euler_characteristic(pd) - euler_characteristic(pr), "chi identity" + rs);
      require(o, tr.restricted.size() == static_cast<std::size_t>(r + 2), "|A''|" + rs);
      if (tr.trace.size() != static_cast<std::size_t>(r + 2)) continue;
      std::vector<std::string> h1{"H1"}, h2{"H2"};
      for (int k = 1; k <= r; ++k) {
        h1.push_back("H13:" + std::to_string(k));
        h2.push_back("H23:" + std::to_string(k));
      }
      require(o, labels(tr.deleted, tr.trace[0]) == h1, "trace of H1''" + rs);
      require(o, labels(tr.deleted, tr.trace[1]) == h2, "trace of H2''" + rs);
      for (int k = 1; k <= r; ++k) {
        require(o, labels(tr.deleted, tr.trace[1 + k]) == std::vector<std::string>{"H12:" + std::to_string(k)},
                "trace of H12:k''" + rs);
      }
    }
    return o;
  });

  criterion(3, "restriction of C_q is (1, 1, zeta^q, ..., zeta^q), r = 2..6, all q", 5.0, [] {
    Outcome o;
    for (int r = 2; r <= 6; ++r) {
      const Triple tr = monomial_triple(r);
      for (int q = 1; q < r; ++q) {
        const Character t2 = restrict_character(component_Cq_point(r, q), tr);
        std::vector<RatFunc> expected{RatFunc(1), RatFunc(1)};
        for (int k = 0; k < r; ++k) expected.emplace_back(Cyclotomic::zeta(r, q));
        require(o, t2.coords == expected, "r=" + std::to_string(r) + " q=" + std::to_string(q));
      }
    }
    return o;
  });

  criterion(4, "C_q = tau_q * T and translation order r / gcd(q, r), r = 2..6", 5.0, [] {
    Outcome o;
    for (int r = 2; r <= 6; ++r) {
      for (int q = 1; q < r; ++q) {
        const std::string tag = " r=" + std::to_string(r) + " q=" + std::to_string(q);
        require(o, component_Cq_point(r, q).coords == (tau(r, q) * torus_T(r).point()).coords, "decomposition" + tag);
        const long long ord = translation_order(component_Cq(r, q));
        require(o, ord == r / std::gcd(q, r), "order" + tag);
        if (std::gcd(q, r) == 1) require(o, ord == r, "primitive order" + tag);
      }
    }
    return o;
  });

  criterion(5, "no non-trivial neighborly partition: D2, D3 exhaustive, D4 pruned", 60.0, [] {
    Outcome o;
    for (int r : {2, 3}) {
      const Arrangement d = family("monomial_deletion", r);
      const auto res = neighborly_partitions(d);
      require(o, res.exhaustive && res.complete && res.partitions.empty(), "D" + std::to_string(r));
      require(o, oracle::brute_neighborly(d).empty(), "enumeration oracle D" + std::to_string(r));
    }
    NeighborlyOptions pruned;
    pruned.max_exhaustive = 13;
    pruned.allow_pruned = true;
    const auto d4 = neighborly_partitions(family("monomial_deletion", 4), pruned);
    require(o, d4.partitions.empty(), "D4 found a partition");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("D4 pruned search ") +
                (d4.complete ? "complete" : "incomplete") + ", " + std::to_string(d4.nodes) + " nodes";
    return o;
  });

  criterion(6, "Fox oracle on decone(D2): h1 >= 1 on C_1, 0 off it", 120.0, [] {
    Outcome o;
    const Arrangement d2 = family("monomial_deletion", 2);
    const Presentation p = deconed_presentation(d2, 0);
    const std::size_t on = h1_dim(p, decone_character(component_Cq_point(2, 1), d2, 0).coords);
    require(o, on >= 1, "generic point of C_1");
    o.detail = "h1 on C_1 = " + std::to_string(on);
    std::mt19937 g(2024);
    std::uniform_int_distribution<int> num(2, 9);
    for (int k = 0; k < 5; ++k) {
      Character t{d2.name(), {}};
      for (int j = 0; j < 8; ++j) t.coords.emplace_back(Cyclotomic(Rational(num(g), num(g) + 10)));
      require(o, !t.product().is_one() && h1_dim(p, decone_character(t, d2, 0).coords) == 0, "random character");
    }
    for (long long u0 : {3, 5, 7}) {
      Character t = component_Cq_point(2, 1).substitute(Var::u, RatFunc(u0));
      t.coords[3] *= RatFunc(2);
      t.coords[5] /= RatFunc(2);
      require(o, h1_dim(p, decone_character(t, d2, 0).coords) == 0, "perturbed point");
    }
    return o;
  });

  criterion(7, "oracle self-consistency: Fox identity, abelianization, specialization ranks", 60.0, [] {
    Outcome o;
    const Arrangement d2 = family("monomial_deletion", 2);
    const Presentation p = deconed_presentation(d2, 0);
    const Character dt = decone_character(component_Cq_point(2, 1), d2, 0);
    const ExactMatrix m = fox_matrix(p, dt.coords);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      RatFunc s;
      for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * (dt.coords[j] - 1);
      require(o, s.is_zero(), "Fox identity row " + std::to_string(i));
    }
    std::vector<std::vector<Cyclotomic>> ab;
    for (const auto& row : abelianized_relators(p)) ab.emplace_back(row.begin(), row.end());
    const std::size_t b1 = p.generators.size() - oracle::rank(ab);
    const long long b2 = oracle::whitney_poincare(decone(d2, 0))[2];
    require(o, b1 == 7, "abelianization rank");
    require(o, static_cast<long long>(p.relators.size()) == b2, "relator count");
    const std::size_t symbolic = rank_ff(m);
    const PolyMatrix cleared = clear_denominators(m);
    std::size_t best = 0;
    for (int k = 1, used = 0; used < 20; ++k) {
      if (std::gcd(k, 210) != 1) continue;
      ++used;
      std::vector<std::vector<Cyclotomic>> num;
      for (const auto& row : specialize(cleared, Var::u, RatFunc(Cyclotomic::zeta(210, k)))) {
        num.emplace_back();
        for (const auto& x : row) num.back().push_back(x.constant_term());
      }
      best = std::max(best, oracle::rank(num));
    }
    require(o, best == symbolic, "specialized rank");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("b1 = ") + std::to_string(b1) + ", relators = " +
                std::to_string(p.relators.size()) + ", rank = " + std::to_string(symbolic);
    return o;
  });

  criterion(8, "theorem pipeline r = 2..5: replayable certificates, stable hash", 600.0, [] {
    Outcome o;
    for (int r = 2; r <= 5; ++r) {
      const std::string rs = " (r=" + std::to_string(r) + ")";
      RunConfig cfg;
      cfg.command = "theorem";
      cfg.r = r;
      cfg.oracle = true;
      const Report a = run_command(cfg);
      const Report b = run_command(cfg);
      require(o, a.data["determinism_hash"] == b.data["determinism_hash"], "hash" + rs);
      const json& certs = a.data["results"]["certificates"];
      require(o, certs.size() == static_cast<std::size_t>(r - 1), "certificate count" + rs);
      for (const auto& c : certs) {
        require(o, recheck_certificate(c).ok, "recheck" + rs);
        require(o, c["membership_basis"] == (r == 2 ? "fox-oracle" : "axiom"), "membership basis" + rs);
      }
    }
    return o;
  });

  criterion(9, "r = n+1 carries at least n essential translated tori, n = " + std::to_string(n), 120.0, [n] {
    Outcome o;
    RunConfig cfg;
    cfg.command = "theorem";
    cfg.r = n + 1;
    const Report rep = run_command(cfg);
    const json& s = rep.data["results"]["summary"];
    const int tori = s["essential_translated_tori"].get<int>();
    require(o, tori >= n, "only " + std::to_string(tori) + " tori");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(tori) + " tori, resonance exclusion verified for " +
                std::to_string(s["exclusion_verified"].get<int>()) + " of " + std::to_string(n);
    cfg.max_partition_size = static_cast<std::size_t>(3 * (n + 1) + 2);
    const Report raised = run_command(cfg);
    o.detail += " (" + std::to_string(raised.data["results"]["summary"]["exclusion_verified"].get<int>()) +
                " with the exhaustive cap raised to " + std::to_string(cfg.max_partition_size) + ")";
    return o;
  });

  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
