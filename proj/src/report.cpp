#include "hyperloc/report.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "hyperloc/certificate.hpp"
#include "hyperloc/fox.hpp"

namespace hyperloc {

namespace {

const char* const kConvention =
    "h1 is the twisted first Betti number of the presentation 2-complex at t (homology with the "
    "character t); cohomology with L_t has the dimension of homology at the inverse character, and "
    "C_q is carried to C_(r-q) by inversion";

using Clock = std::chrono::steady_clock;

std::string poly_string(const std::vector<long long>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!first) os << (c[k] < 0 ? " - " : " + ");
    else if (c[k] < 0) os << "-";
    const long long a = std::llabs(c[k]);
    if (k == 0 || a != 1) os << a;
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return first ? "0" : os.str();
}

json labels_of(const Arrangement& a, const std::vector<int>& idx) {
  json out = json::array();
  for (int i : idx) out.push_back(a[i].label);
  return out;
}

int resolve_pivot(const Arrangement& a, const std::string& text) {
  if (auto i = a.index_of(text)) return *i;
  try {
    std::size_t used = 0;
    const int k = std::stoi(text, &used);
    if (used == text.size() && k >= 1 && k <= static_cast<int>(a.size())) return k - 1;
  } catch (const std::exception&) {
  }
  throw ConfigError("pivot '" + text + "' is neither a hyperplane label nor an index in 1.." +
                    std::to_string(a.size()));
}

json source_echo(const RunConfig& cfg) {
  json j = json::object();
  if (cfg.family) j["family"] = *cfg.family;
  if (cfg.poly) j["poly"] = *cfg.poly;
  if (cfg.input) j["input"] = *cfg.input;
  if (cfg.r) j["r"] = *cfg.r;
  if (cfg.dim) j["dim"] = *cfg.dim;
  return j;
}

json read_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return read_json_text(ss.str());
}

Report finish(const RunConfig& cfg, json inputs, json results, std::string text, Clock::time_point start) {
  Report rep;
  rep.data = json{{"tool", "hyperloc"},
                  {"version", kToolVersion},
                  {"command", cfg.command},
                  {"inputs", std::move(inputs)},
                  {"results", std::move(results)}};
  rep.data["determinism_hash"] = determinism_hash(rep.data);
  rep.text = std::move(text);
  rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

}  // namespace

std::string determinism_hash(const json& data) {
  json copy = data;
  if (copy.is_object()) copy.erase("determinism_hash");
  const std::string s = copy.dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(s.data(), s.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

Arrangement load_arrangement(const RunConfig& cfg) {
  const int sources = (cfg.family ? 1 : 0) + (cfg.poly ? 1 : 0) + (cfg.input ? 1 : 0);
  if (sources != 1) throw ConfigError("exactly one of --family, --poly, --input is required");
  if (cfg.family) {
    const std::string& f = *cfg.family;
    if (f == "monomial_full" || f == "monomial_deletion") {
      if (!cfg.r) throw ConfigError("--family " + f + " needs --r");
      if (*cfg.r < 2) throw ConfigError("--r must be at least 2");
      return family(f, *cfg.r);
    }
    if (f == "boolean" || f == "braid") {
      if (!cfg.dim) throw ConfigError("--family " + f + " needs --dim");
      return family(f, 0, *cfg.dim);
    }
    throw ConfigError("unknown family '" + f + "'");
  }
  if (cfg.poly) return parse_defining_polynomial(*cfg.poly, cfg.dim);
  return arrangement_from_json(read_json_file(*cfg.input));
}

Report cmd_lattice(const RunConfig& cfg) {
  const auto start = Clock::now();
  const Arrangement a = load_arrangement(cfg);
  json inputs = source_echo(cfg);
  if (cfg.pivot) inputs["pivot"] = *cfg.pivot;

  std::map<int, std::map<std::size_t, int>> census;
  json flats = json::array();
  for (const Flat& f : a.flats()) {
    ++census[f.rank][f.indices.size()];
    flats.push_back(flat_to_json(f, a));
  }
  json counts = json::array();
  for (const auto& [rank, by] : census) {
    json mult = json::object();
    int total = 0;
    for (const auto& [size, count] : by) {
      mult[std::to_string(size)] = count;
      total += count;
    }
    counts.push_back(json{{"rank", rank}, {"count", total}, {"by_multiplicity", mult}});
  }
  const auto pi = poincare_polynomial(a);
  json results{{"arrangement", to_json(a)},
               {"flat_counts", counts},
               {"flats", flats},
               {"poincare", pi},
               {"euler_characteristic", euler_characteristic(pi)}};

  std::ostringstream text;
  text << "arrangement: " << a.name() << " (" << a.size() << " hyperplanes in dimension " << a.ambient_dim()
       << ", conductor " << a.conductor() << ")\n";
  for (const auto& c : counts) {
    text << "rank " << c["rank"].get<int>() << " flats: " << c["count"].get<int>() << "  by multiplicity "
         << c["by_multiplicity"].dump() << "\n";
  }
  text << "Poincare polynomial: " << poly_string(pi) << "\n";
  text << "Euler characteristic: " << euler_characteristic(pi) << "\n";

  if (cfg.pivot) {
    const int p = resolve_pivot(a, *cfg.pivot);
    const Triple tr = make_triple(a, p);
    const auto pd = poincare_polynomial(tr.deleted);
    const auto pr = poincare_polynomial(tr.restricted);
    std::vector<long long> rhs(std::max(pd.size(), pr.size() + 1), 0);
    for (std::size_t k = 0; k < pd.size(); ++k) rhs[k] += pd[k];
    for (std::size_t k = 0; k < pr.size(); ++k) rhs[k + 1] += pr[k];
    std::vector<long long> lhs = pi;
    lhs.resize(std::max(lhs.size(), rhs.size()), 0);
    rhs.resize(lhs.size(), 0);
    const bool identity = lhs == rhs;
    const bool euler = euler_characteristic(pi) == euler_characteristic(pd) - euler_characteristic(pr);
    json trace = json::array();
    for (std::size_t k = 0; k < tr.trace.size(); ++k) {
      trace.push_back(json{{"restricted", tr.restricted[k].label}, {"deleted", labels_of(tr.deleted, tr.trace[k])}});
    }
    results["triple"] = json{{"pivot", a[p].label},
                             {"deleted_poincare", pd},
                             {"restricted_poincare", pr},
                             {"restricted_size", tr.restricted.size()},
                             {"trace", trace},
                             {"deletion_restriction_identity", identity},
                             {"euler_identity", euler}};
    text << "triple at " << a[p].label << ": pi(A') = " << poly_string(pd) << ", pi(A'') = " << poly_string(pr)
         << "\n";
    text << "pi(A) = pi(A') + t pi(A''): " << (identity ? "holds" : "FAILS") << "\n";
    text << "chi(M) = chi(M') - chi(M''): " << (euler ? "holds" : "FAILS") << "\n";
    for (const auto& t : trace) text << "  " << t["restricted"].get<std::string>() << " <- " << t["deleted"].dump() << "\n";
  }
  return finish(cfg, std::move(inputs), std::move(results), text.str(), start);
}

Report cmd_resonance(const RunConfig& cfg) {
  const auto start = Clock::now();
  const Arrangement a = load_arrangement(cfg);
  json inputs = source_echo(cfg);
  inputs["max_partition_size"] = cfg.max_partition_size;

  NeighborlyOptions opts;
  opts.max_exhaustive = cfg.max_partition_size;
  const auto verdict = essential_resonance_exists(a, opts);
  const auto locals = local_components(a);
  // The local-component rule short-circuits the search; run it anyway so the
  // report always lists the partitions.
  const NeighborlyResult search = verdict.rule == "local-component" ? neighborly_partitions(a, opts) : verdict.search;

  json lc = json::array();
  for (const auto& c : locals) lc.push_back(json{{"flat", labels_of(a, c.flat.indices)}, {"dimension", c.dimension}});
  json parts = json::array();
  for (const auto& p : search.partitions) {
    json blocks = json::array();
    for (const auto& b : p) blocks.push_back(labels_of(a, b));
    parts.push_back(blocks);
  }
  json results{{"arrangement", a.name()},
               {"local_components", lc},
               {"neighborly_partitions", parts},
               {"search", json{{"complete", search.complete}, {"exhaustive", search.exhaustive}, {"nodes", search.nodes}}},
               {"essential_component_exists", verdict.exists},
               {"rule", verdict.rule}};

  std::ostringstream text;
  text << "arrangement: " << a.name() << " (" << a.size() << " hyperplanes)\n";
  text << "local components: " << locals.size() << "\n";
  for (const auto& c : lc) text << "  " << c["flat"].dump() << " dimension " << c["dimension"].get<int>() << "\n";
  text << "non-trivial neighborly partitions: " << parts.size() << " (search " << (search.complete ? "complete" : "incomplete")
       << ", " << search.nodes << " nodes)\n";
  for (const auto& p : parts) text << "  " << p.dump() << "\n";
  text << "verdict: " << (verdict.exists ? "an essential component of R_1 exists" : "no essential component of R_1")
       << " (rule: " << verdict.rule << ")\n";
  return finish(cfg, std::move(inputs), std::move(results), text.str(), start);
}

Report cmd_theorem(const RunConfig& cfg) {
  const auto start = Clock::now();
  if (!cfg.r) throw ConfigError("theorem needs --r");
  const int r = *cfg.r;
  if (r < 2) throw ConfigError("--r must be at least 2");
  std::vector<int> qs;
  if (cfg.q) {
    if (*cfg.q < 1 || *cfg.q > r - 1) throw ConfigError("--q must lie in 1.." + std::to_string(r - 1));
    qs.push_back(*cfg.q);
  } else {
    for (int q = 1; q < r; ++q) qs.push_back(q);
  }
  json inputs{{"r", r}, {"q", cfg.q ? json(*cfg.q) : json("all")}, {"oracle", cfg.oracle},
              {"max_partition_size", cfg.max_partition_size}};

  CertifyOptions opts;
  opts.oracle = cfg.oracle;
  opts.search.max_exhaustive = cfg.max_partition_size;
  json certs = json::array();
  json replays = json::array();
  int essential_tori = 0, fox_confirmed = 0, exclusion_verified = 0, replay_ok = 0;
  std::ostringstream text;
  text << "r = " << r << ", arrangement D_" << r << " (" << 3 * r + 2 << " hyperplanes)\n";
  for (int q : qs) {
    const NonvanishingCertificate c = certify_sigma1(r, q, opts);
    const json cj = to_json(c);
    const RecheckReport rr = recheck_certificate(cj);
    bool essential = false, excluded = false;
    for (const auto& s : c.steps) {
      if (s.rule == "ESSENTIALITY") essential = s.verified;
      if (s.rule == "RESONANCE_EXCLUSION") excluded = s.verified;
    }
    // C_q is one-dimensional and translated whenever tau_q has order > 1.
    if (essential && c.translation_order > 1) ++essential_tori;
    if (c.membership_basis == "fox-oracle") ++fox_confirmed;
    if (excluded) ++exclusion_verified;
    if (rr.ok) ++replay_ok;
    certs.push_back(cj);
    replays.push_back(json{{"q", q}, {"ok", rr.ok}, {"failures", rr.failures}});
    text << "  q = " << q << ": translation order " << c.translation_order << ", membership " << c.membership_basis;
    if (c.fox_h1) text << " (h1 = " << *c.fox_h1 << ")";
    text << ", exclusion " << (excluded ? "verified" : "UNVERIFIED") << ", replay " << (rr.ok ? "ok" : "FAILED") << "\n";
  }
  json results{{"certificates", certs},
               {"recheck", replays},
               {"summary", json{{"certificates", certs.size()},
                                {"essential_translated_tori", essential_tori},
                                {"fox_confirmed", fox_confirmed},
                                {"exclusion_verified", exclusion_verified},
                                {"replay_ok", replay_ok}}},
               {"convention", kConvention}};
  text << "essential positive-dimensional translated tori: " << essential_tori << "\n";
  return finish(cfg, std::move(inputs), std::move(results), text.str(), start);
}

Report cmd_sigma_test(const RunConfig& cfg) {
  const auto start = Clock::now();
  const Arrangement a = load_arrangement(cfg);
  if (!cfg.character) throw ConfigError("sigma-test needs --character");
  if (cfg.m < 1) throw ConfigError("--m must be at least 1");
  json inputs = source_echo(cfg);
  inputs["character"] = *cfg.character;
  inputs["m"] = cfg.m;
  if (cfg.pivot) inputs["pivot"] = *cfg.pivot;

  Character t;
  const std::string& given = *cfg.character;
  if (given == "trivial") {
    t = trivial_character(a);
  } else if (given == "Cq") {
    if (!cfg.r || !cfg.q) throw ConfigError("--character Cq needs --r and --q");
    if (*cfg.r < 2 || *cfg.q < 1 || *cfg.q > *cfg.r - 1) throw ConfigError("(r, q) out of range");
    if (a.labels() != family("monomial_deletion", *cfg.r).labels()) {
      throw ConfigError("--character Cq needs the arrangement D_" + std::to_string(*cfg.r));
    }
    t = component_Cq_point(*cfg.r, *cfg.q);
  } else {
    const json j = given.find_first_of("{[") == std::string::npos ? read_json_file(given) : read_json_text(given);
    t = character_from_json(j);
  }
  if (t.size() != a.size()) throw ConfigError("character length does not match the arrangement");
  if (t.host.empty() || t.host != a.name()) {
    if (!t.host.empty() && given != "Cq") throw ConfigError("character host '" + t.host + "' is not '" + a.name() + "'");
    t.host = a.name();
  }
  std::optional<int> pivot;
  if (cfg.pivot) pivot = resolve_pivot(a, *cfg.pivot);
  const Sigma1Result res = sigma1_membership(a, t, cfg.m, pivot);

  json results{{"arrangement", a.name()},
               {"character", to_json(t)},
               {"member", res.member},
               {"h1", res.h1},
               {"route", res.route},
               {"decone_pivot", res.pivot >= 0 ? json(a[res.pivot].label) : json(nullptr)},
               {"convention", kConvention}};
  std::ostringstream text;
  text << "arrangement: " << a.name() << "\n";
  if (res.route == "trivial-character") {
    const auto pi = poincare_polynomial(a);
    results["betti"] = pi;
    text << "trivial character: constant-coefficient Betti numbers " << json(pi).dump() << "\n";
  }
  text << "dim H^1 = " << res.h1 << " (route " << res.route;
  if (res.pivot >= 0) text << ", decone at " << a[res.pivot].label;
  text << ")\n";
  text << "member of Sigma^1_" << cfg.m << ": " << (res.member ? "yes" : "no") << "\n";
  return finish(cfg, std::move(inputs), std::move(results), text.str(), start);
}

Report run_command(const RunConfig& cfg) {
  if (cfg.command == "lattice") return cmd_lattice(cfg);
  if (cfg.command == "resonance") return cmd_resonance(cfg);
  if (cfg.command == "theorem") return cmd_theorem(cfg);
  if (cfg.command == "sigma-test") return cmd_sigma_test(cfg);
  throw ConfigError("unknown command '" + cfg.command + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const UnsupportedError*>(&e)) return kExitUnsupported;
  if (dynamic_cast<const SizeBoundError*>(&e)) return kExitSizeBound;
  return kExitValidation;
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return report.data.dump(2) + "\n";
  std::ostringstream os;
  os << report.text;
  os << "determinism hash: " << report.data["determinism_hash"].get<std::string>() << "\n";
  os << "elapsed: " << std::fixed << std::setprecision(3) << report.seconds << " s\n";
  return os.str();
}

}  // namespace hyperloc
