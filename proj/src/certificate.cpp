#include "hyperloc/certificate.hpp"

#include <map>
#include <numeric>

#include "hyperloc/fox.hpp"

namespace hyperloc {

namespace {

const char* const kCiteComponentC =
    "Characteristic varieties of arrangements, Math. Proc. Cambridge Philos. Soc. 127 (1999): "
    "Sigma_1 of the full monomial arrangement A_r has an essential two-dimensional component C "
    "through the identity";
const char* const kCiteTangentCone =
    "Tangent cone theorem: the tangent cone at the identity of Sigma_1(A) coincides with R_1(A); "
    "Characteristic varieties of arrangements, Math. Proc. Cambridge Philos. Soc. 127 (1999)";
const char* const kCiteResonance =
    "Arrangements and cohomology, Ann. Combin. 1 (1997); Cohomology of the Orlik-Solomon algebras and "
    "local systems, Compositio Math. 121 (2000): "
    "an essential component of R_1 yields a non-trivial neighborly partition";

struct Replay {
  bool consistent = true;
  bool verified = false;
  std::string note;
};

bool same(const Character& a, const Character& b) { return a.host == b.host && a.coords == b.coords; }

struct Context {
  int r = 0;
  int q = 0;
  std::map<int, bool> verified;
  std::map<int, std::string> rule;

  bool dep_verified(const std::vector<int>& deps, const std::string& r) const {
    for (int d : deps) {
      auto it = rule.find(d);
      if (it != rule.end() && it->second == r) return verified.at(d);
    }
    return false;
  }
};

Replay replay(const std::string& rule, const json& in, const std::vector<int>& deps, const Context& ctx) {
  Replay out;
  const int r = ctx.r;
  const int q = ctx.q;
  if (rule == "AXIOM_C") {
    const ParamSubtorus c = component_C(r);
    out.consistent = in.at("component") == to_json(c) && c.point().product().is_one();
    if (!out.consistent) out.note = "stored component C differs from the construction";
    out.verified = false;
  } else if (rule == "EXTEND_CHARACTER") {
    const Triple tr = monomial_triple(r);
    const Character tp = character_from_json(in.at("t_prime"));
    const Character t = character_from_json(in.at("t"));
    // Points of C with w = zeta^q, i.e. v = zeta^-q / u.
    const Character on_c =
        component_C(r).point().substitute(Var::v, RatFunc(Cyclotomic::zeta(r, -q)) / RatFunc::var(Var::u));
    out.verified = same(tp, component_Cq_point(r, q)) && same(extend_character(tp, tr), t) &&
                   t.coords == on_c.coords && t.coords[tr.pivot].is_one();
  } else if (rule == "RESTRICT_CHARACTER") {
    const Triple tr = monomial_triple(r);
    const Character tp = character_from_json(in.at("t_prime"));
    const Character tr2 = character_from_json(in.at("t_restricted"));
    std::vector<RatFunc> expected{RatFunc(1), RatFunc(1)};
    for (int k = 0; k < r; ++k) expected.push_back(RatFunc(Cyclotomic::zeta(r, q)));
    out.verified = same(tp, component_Cq_point(r, q)) && same(restrict_character(tp, tr), tr2) &&
                   tr2.coords == expected && !tr2.is_trivial();
  } else if (rule == "H0_VANISHING") {
    out.verified = !character_from_json(in.at("t_restricted")).is_trivial();
  } else if (rule == "TRIPLE_COROLLARY") {
    out.verified = ctx.dep_verified(deps, "EXTEND_CHARACTER") && ctx.dep_verified(deps, "RESTRICT_CHARACTER") &&
                   ctx.dep_verified(deps, "H0_VANISHING");
  } else if (rule == "FOX_ORACLE") {
    const Arrangement d = family("monomial_deletion", r);
    const auto pivot = d.index_of(in.at("pivot").get<std::string>());
    if (!pivot) {
      out.consistent = false;
      out.note = "unknown pivot";
      return out;
    }
    const Character dt = character_from_json(in.at("character"));
    const std::size_t h1 = h1_dim(deconed_presentation(d, *pivot), dt.coords);
    out.verified = same(dt, decone_character(component_Cq_point(r, q), d, *pivot)) &&
                   in.at("h1").get<std::size_t>() == h1 && h1 >= 1;
  } else if (rule == "ESSENTIALITY") {
    const Character c = character_from_json(in.at("point"));
    out.verified = same(c, component_Cq_point(r, q)) && is_essential(c);
  } else if (rule == "RESONANCE_EXCLUSION") {
    const Arrangement d = family("monomial_deletion", r);
    NeighborlyOptions opts;
    opts.max_exhaustive = in.at("max_exhaustive").get<std::size_t>();
    opts.allow_pruned = true;
    opts.node_budget = in.at("node_budget").get<std::uint64_t>();
    const auto v = essential_resonance_exists(d, opts);
    const bool proved = !v.exists && v.complete && v.search.exhaustive;
    out.consistent = in.at("partitions_found").get<std::size_t>() == v.search.partitions.size() &&
                     in.at("complete").get<bool>() == v.complete &&
                     in.at("exhaustive").get<bool>() == v.search.exhaustive;
    if (!out.consistent) out.note = "stored search summary differs from the recomputation";
    out.verified = proved;
  } else if (rule == "TANGENT_CONE") {
    out.consistent = in.at("exclusion_verified").get<bool>() == ctx.dep_verified(deps, "RESONANCE_EXCLUSION") &&
                     in.at("essential").get<bool>() == ctx.dep_verified(deps, "ESSENTIALITY");
    out.verified = false;
  } else if (rule == "TRANSLATION_ORDER") {
    const ParamSubtorus s = component_Cq(r, q);
    const Character tq = tau(r, q);
    const ParamSubtorus t = torus_T(r);
    const bool decomposed = same(component_Cq_point(r, q), tq * t.point()) && in.at("subtorus") == to_json(s);
    const long long order = translation_order(s);
    out.verified = decomposed && order == in.at("order").get<long long>() && order == r / std::gcd(q, r);
  } else {
    out.consistent = false;
    out.note = "unknown rule";
  }
  return out;
}

class Builder {
 public:
  Builder(int r, int q) { ctx_.r = r, ctx_.q = q; }

  int add(std::string rule, std::vector<int> deps, json inputs, std::string claim, bool axiom = false,
          std::optional<std::string> citation = std::nullopt) {
    CertificateStep s;
    s.id = static_cast<int>(steps_.size()) + 1;
    s.rule = std::move(rule);
    s.depends_on = std::move(deps);
    s.inputs = std::move(inputs);
    s.claim = std::move(claim);
    s.axiom = axiom;
    s.citation = std::move(citation);
    const Replay r = replay(s.rule, s.inputs, s.depends_on, ctx_);
    if (!r.consistent) throw std::logic_error("certificate step " + s.rule + " is inconsistent: " + r.note);
    s.verified = r.verified;
    ctx_.verified[s.id] = s.verified;
    ctx_.rule[s.id] = s.rule;
    steps_.push_back(std::move(s));
    return steps_.back().id;
  }

  std::vector<CertificateStep> take() { return std::move(steps_); }

 private:
  Context ctx_;
  std::vector<CertificateStep> steps_;
};

}  // namespace

NonvanishingCertificate certify_sigma1(int r, int q, const CertifyOptions& opts) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (q < 1 || q > r - 1) throw std::invalid_argument("q must lie in 1.." + std::to_string(r - 1));
  NonvanishingCertificate cert;
  cert.r = r;
  cert.q = q;
  cert.oracle = opts.oracle;

  const Triple tr = monomial_triple(r);
  const Character tp = component_Cq_point(r, q);
  const Character t = extend_character(tp, tr);
  const Character t2 = restrict_character(tp, tr);
  const std::string rs = std::to_string(r);

  Builder b(r, q);
  const int axiom = b.add("AXIOM_C", {}, json{{"r", r}, {"component", to_json(component_C(r))}},
                          "the generic point of C lies in Sigma_1(A_" + rs + ")", true, kCiteComponentC);
  const int ext = b.add("EXTEND_CHARACTER", {},
                        json{{"pivot", tr.full[tr.pivot].label}, {"t_prime", to_json(tp)}, {"t", to_json(t)}},
                        "i^* of the generic point of C_q is the point of C with w = zeta^q, t_3 = 1");
  const int res = b.add("RESTRICT_CHARACTER", {}, json{{"t_prime", to_json(tp)}, {"t_restricted", to_json(t2)}},
                        "j^* of the generic point of C_q is (1, 1, zeta^q, ..., zeta^q), non-trivial");
  const int h0 = b.add("H0_VANISHING", {res}, json{{"t_restricted", to_json(t2)}},
                       "H^0(M(A''); L'') = 0 since L'' is non-trivial");
  const int cor = b.add("TRIPLE_COROLLARY", {axiom, ext, res, h0},
                        json{{"full", tr.full.name()}, {"deleted", tr.deleted.name()}, {"pivot", tr.full[tr.pivot].label}},
                        "H^1(M(D_" + rs + "); L') = H^1(M(A_" + rs + "); L) != 0, so C_q lies in Sigma_1(D_" + rs + ")");
  (void)cor;
  cert.membership_basis = "axiom";
  if (opts.oracle && r == 2) {
    const Arrangement d = family("monomial_deletion", r);
    const int pivot = 0;
    const Character dt = decone_character(tp, d, pivot);
    const std::size_t h1 = h1_dim(deconed_presentation(d, pivot), dt.coords);
    const int fox = b.add("FOX_ORACLE", {},
                          json{{"pivot", d[pivot].label}, {"character", to_json(dt)}, {"h1", h1}},
                          "dim H^1(M(D_" + rs + "); L_t) = " + std::to_string(h1) +
                              " >= 1 at the generic point of C_q, by the Alexander matrix of the deconed arrangement");
    (void)fox;
    cert.fox_h1 = h1;
    cert.membership_basis = "fox-oracle";
  }
  const int ess = b.add("ESSENTIALITY", {}, json{{"point", to_json(tp)}},
                        "no coordinate of C_q is identically 1, so C_q and any component containing it are essential");
  const auto verdict = [&] {
    NeighborlyOptions o = opts.search;
    o.allow_pruned = true;
    return essential_resonance_exists(family("monomial_deletion", r), o);
  }();
  const int exc = b.add("RESONANCE_EXCLUSION", {},
                        json{{"arrangement", tr.deleted.name()},
                             {"max_exhaustive", opts.search.max_exhaustive},
                             {"node_budget", opts.search.node_budget},
                             {"partitions_found", verdict.search.partitions.size()},
                             {"complete", verdict.complete},
                             {"exhaustive", verdict.search.exhaustive}},
                        "D_" + rs + " has no non-trivial neighborly partition and no local component on every "
                        "hyperplane, so R_1(D_" + rs + ") has no essential component",
                        false, kCiteResonance);
  b.add("TANGENT_CONE", {ess, exc},
        json{{"essential", true}, {"exclusion_verified", !verdict.exists && verdict.complete && verdict.search.exhaustive}},
        "C_q lies in no component of Sigma_1(D_" + rs + ") through the identity, so it is a translated component",
        true, kCiteTangentCone);
  const ParamSubtorus s = component_Cq(r, q);
  cert.translation_order = translation_order(s);
  b.add("TRANSLATION_ORDER", {}, json{{"subtorus", to_json(s)}, {"order", cert.translation_order}},
        "C_q = tau_q * T and tau_q has order " + std::to_string(cert.translation_order) + " modulo T");
  cert.steps = b.take();
  return cert;
}

json to_json(const NonvanishingCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    steps.push_back(json{{"id", s.id},
                         {"rule", s.rule},
                         {"depends_on", s.depends_on},
                         {"inputs", s.inputs},
                         {"claim", s.claim},
                         {"verified", s.verified},
                         {"axiom", s.axiom},
                         {"citation", s.citation ? json(*s.citation) : json(nullptr)}});
  }
  return json{{"claim",
               json{{"arrangement", "monomial_deletion(r=" + std::to_string(c.r) + ")"},
                    {"family", "C_q"},
                    {"degree", c.degree},
                    {"lower_bound", c.lower_bound},
                    {"statement", "C_q is an essential component of Sigma_1 translated by a character of order " +
                                      std::to_string(c.translation_order)}}},
              {"r", c.r},
              {"q", c.q},
              {"oracle", c.oracle},
              {"membership_basis", c.membership_basis},
              {"translation_order", c.translation_order},
              {"fox_h1", c.fox_h1 ? json(*c.fox_h1) : json(nullptr)},
              {"steps", steps}};
}

RecheckReport recheck_certificate(const json& cert) {
  RecheckReport rep;
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    rep.failures.push_back(why);
  };
  try {
    Context ctx;
    ctx.r = cert.at("r").get<int>();
    ctx.q = cert.at("q").get<int>();
    if (ctx.r < 2 || ctx.q < 1 || ctx.q > ctx.r - 1) {
      fail("(r, q) out of range");
      return rep;
    }
    bool fox_verified = false;
    long long order = -1;
    int expected_id = 1;
    for (const auto& s : cert.at("steps")) {
      const int id = s.at("id").get<int>();
      const std::string rule = s.at("rule").get<std::string>();
      const std::string tag = "step " + std::to_string(id) + " (" + rule + ")";
      if (id != expected_id++) fail(tag + ": steps are not numbered consecutively");
      const auto deps = s.at("depends_on").get<std::vector<int>>();
      for (int d : deps) {
        if (d <= 0 || d >= id) fail(tag + ": dependency " + std::to_string(d) + " does not precede it");
      }
      const bool axiom = s.at("axiom").get<bool>();
      const bool verified = s.at("verified").get<bool>();
      if (axiom && (verified || s.at("citation").is_null())) fail(tag + ": axiom steps need a citation and no verification");
      const Replay r = replay(rule, s.at("inputs"), deps, ctx);
      if (!r.consistent) fail(tag + ": " + r.note);
      if (r.verified != verified) fail(tag + ": stored verification does not replay");
      ctx.verified[id] = verified;
      ctx.rule[id] = rule;
      if (rule == "FOX_ORACLE") {
        fox_verified = verified;
        if (cert.at("fox_h1") != s.at("inputs").at("h1")) fail(tag + ": fox_h1 does not match the step");
      }
      if (rule == "TRANSLATION_ORDER") order = s.at("inputs").at("order").get<long long>();
    }
    if (order != cert.at("translation_order").get<long long>()) fail("translation order does not match its step");
    const std::string basis = cert.at("membership_basis").get<std::string>();
    if (basis != (fox_verified ? "fox-oracle" : "axiom")) fail("membership basis does not match the steps");
  } catch (const std::exception& e) {
    fail(std::string("malformed certificate: ") + e.what());
  }
  return rep;
}

}  // namespace hyperloc
