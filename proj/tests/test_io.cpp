#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <sys/wait.h>

#include "hyperloc/certificate.hpp"
#include "hyperloc/fox.hpp"
#include "hyperloc/report.hpp"

using namespace hyperloc;

namespace {

struct Run {
  int status;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(HYPERLOC_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe.release());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_SUITE("serialization") {

TEST_CASE("JSON round trips") {
  const Cyclotomic z = Cyclotomic::zeta(12, 5) + Cyclotomic(Rational(3, 7));
  CHECK(cyclotomic_from_json(to_json(z)) == z);
  CHECK(cyclotomic_from_json(json("zeta(3)^2")) == Cyclotomic::zeta(3, 2));
  const RatFunc f = (RatFunc::var(Var::u) + RatFunc(Cyclotomic::zeta(5))) / (RatFunc::var(Var::v).pow(2) - 1);
  CHECK(ratfunc_from_json(to_json(f)) == f);
  for (const Arrangement& a : {family("monomial_full", 3), decone(family("monomial_deletion", 2), 0)}) {
    const Arrangement b = arrangement_from_json(to_json(a));
    CHECK(b.name() == a.name());
    CHECK(b.labels() == a.labels());
    CHECK(to_json(b) == to_json(a));
  }
  const Character t = component_Cq_point(4, 3);
  const Character t2 = character_from_json(to_json(t));
  CHECK(t2.host == t.host);
  CHECK(t2.coords == t.coords);
  const Weight w{RatFunc(1), RatFunc::var(Var::u), RatFunc(Rational(-2, 3))};
  CHECK(weight_from_json(weight_to_json(w)) == w);
  const Presentation p = deconed_presentation(family("monomial_deletion", 2), 0);
  const Presentation p2 = presentation_from_json(to_json(p));
  CHECK(p2.generators == p.generators);
  CHECK(p2.relators == p.relators);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS(arrangement_from_json(json::parse(R"({"name": "x", "hyperplanes": []})")));
  CHECK_THROWS(cyclotomic_from_json(json("zeta(")));
  CHECK_THROWS(arrangement_from_json(json::parse(
      R"({"name": "x", "ambient_dim": 2, "hyperplanes": [{"label": "a", "normal": [1, 0]}, {"label": "b", "normal": [2, 0]}]})")));
}

}

TEST_SUITE("certificates") {

TEST_CASE("certificates replay and tampering is detected") {
  CertifyOptions o;
  o.oracle = true;
  const auto c = certify_sigma1(2, 1, o);
  CHECK(c.membership_basis == "fox-oracle");
  CHECK(c.fox_h1 == std::optional<std::size_t>(1));
  const json j = to_json(c);
  CHECK(recheck_certificate(j).ok);
  CHECK(recheck_certificate(json::parse(j.dump())).ok);

  json bad = j;
  for (auto& s : bad["steps"]) {
    if (s["rule"] == "RESTRICT_CHARACTER") s["inputs"]["t_restricted"]["coords"][2] = "1";
  }
  CHECK_FALSE(recheck_certificate(bad).ok);

  json lied = j;
  for (auto& s : lied["steps"]) {
    if (s["rule"] == "AXIOM_C") s["verified"] = true;
  }
  CHECK_FALSE(recheck_certificate(lied).ok);

  json wrong_order = j;
  wrong_order["translation_order"] = 3;
  CHECK_FALSE(recheck_certificate(wrong_order).ok);

  json forward = j;
  forward["steps"][0]["depends_on"] = json::array({5});
  CHECK_FALSE(recheck_certificate(forward).ok);

  CHECK_FALSE(recheck_certificate(json::parse(R"({"r": 2})")).ok);
}

TEST_CASE("axiom-backed membership for r >= 3") {
  CertifyOptions o;
  o.oracle = true;
  const auto c = certify_sigma1(3, 2, o);
  CHECK(c.membership_basis == "axiom");
  CHECK_FALSE(c.fox_h1);
  CHECK(c.translation_order == 3);
  bool axiom_cited = false;
  for (const auto& s : c.steps) {
    if (s.axiom) {
      CHECK_FALSE(s.verified);
      CHECK(s.citation);
      axiom_cited = true;
    }
    if (s.rule == "RESONANCE_EXCLUSION") CHECK(s.verified);
  }
  CHECK(axiom_cited);
  CHECK(recheck_certificate(to_json(c)).ok);
}

}

TEST_SUITE("cli") {

TEST_CASE("reports are deterministic") {
  const Run a = cli("theorem --r 3 --format json");
  const Run b = cli("theorem --r 3 --format json");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j["determinism_hash"] == determinism_hash(j));
  CHECK(j["results"]["summary"]["certificates"] == 2);
  CHECK(j["results"]["summary"]["replay_ok"] == 2);
}

TEST_CASE("exit codes") {
  CHECK(cli("lattice --family monomial_deletion --r 2").status == kExitOk);
  CHECK(cli("lattice").status == kExitValidation);
  CHECK(cli("lattice --family monomial_deletion --r 2 --poly x1").status == kExitValidation);
  CHECK(cli("lattice --family nope --r 2").status == kExitValidation);
  CHECK(cli("lattice --poly 'x1*x1'").status == kExitValidation);
  CHECK(cli("theorem --r 1").status == kExitValidation);
  CHECK(cli("theorem --r 3 --q 3").status == kExitValidation);
  CHECK(cli("resonance --family monomial_deletion --r 5").status == kExitSizeBound);
  CHECK(cli("sigma-test --family monomial_full --r 3 --character '{\"coords\": [1,1,1,1,1,1,1,1,1,1,1,2]}'").status ==
        kExitOk);
  CHECK(cli("sigma-test --poly 'x1*x2*(x1-zeta(3)*x2)*x3' --character '{\"coords\": [2, 3, 5, \"1/30\"]}'").status ==
        kExitUnsupported);
  CHECK(cli("sigma-test --family monomial_deletion --r 2 --character Cq").status == kExitValidation);
  CHECK(cli("bogus").status == kExitValidation);
}

TEST_CASE("sigma-test on the generic point of C_1") {
  const Run r = cli("sigma-test --family monomial_deletion --r 2 --character Cq --q 1 --pivot H13:1 --format json");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["results"]["member"] == true);
  CHECK(j["results"]["h1"] == 1);
  CHECK(j["results"]["decone_pivot"] == "H13:1");
}

TEST_CASE("lattice report and output file") {
  const std::string path = "lattice_report_test.json";
  const Run r = cli("lattice --family monomial_full --r 2 --pivot H3 --format json --out " + path);
  REQUIRE(r.status == 0);
  std::ifstream in(path);
  REQUIRE(in);
  const json j = json::parse(in);
  CHECK(j["results"]["poincare"] == json::array({1, 9, 23, 15}));
  CHECK(j["results"]["triple"]["deletion_restriction_identity"] == true);
  CHECK(j["results"]["triple"]["restricted_size"] == 4);
  std::remove(path.c_str());
}

TEST_CASE("in-process commands") {
  RunConfig cfg;
  cfg.command = "resonance";
  cfg.family = "monomial_full";
  cfg.r = 2;
  const Report rep = run_command(cfg);
  CHECK(rep.data["results"]["essential_component_exists"] == true);
  CHECK(rep.data["results"]["neighborly_partitions"].size() == 1);
  cfg.command = "theorem";
  cfg.family.reset();
  cfg.r = 4;
  cfg.q = 2;
  const Report th = run_command(cfg);
  CHECK(th.data["results"]["certificates"][0]["translation_order"] == 2);
  CHECK(render(th, "text").find("elapsed") != std::string::npos);
  CHECK(render(th, "json").find("elapsed") == std::string::npos);
}

}

#include "golden_corpus.hpp"

TEST_SUITE("serialization") {

TEST_CASE("regression corpus is unchanged") {
  for (const auto& [name, data] : golden::corpus()) {
    CAPTURE(name);
    std::ifstream in(std::string(HYPERLOC_GOLDEN_DIR) + "/" + name);
    REQUIRE(in);
    CHECK(json::parse(in) == data);
  }
}

TEST_CASE("stored certificates still replay") {
  for (int r = 2; r <= 5; ++r) {
    std::ifstream in(std::string(HYPERLOC_GOLDEN_DIR) + "/certificates_r" + std::to_string(r) + ".json");
    REQUIRE(in);
    for (const auto& c : json::parse(in)) CHECK(recheck_certificate(c).ok);
  }
}

}

TEST_SUITE("cli") {

TEST_CASE("text reports differ only in timing") {
  auto strip = [](const std::string& s) {
    std::string out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
      if (line.rfind("elapsed:", 0) != 0) out += line + "\n";
    }
    return out;
  };
  const Run a = cli("resonance --family monomial_deletion --r 3");
  const Run b = cli("resonance --family monomial_deletion --r 3");
  REQUIRE(a.status == 0);
  CHECK(strip(a.out) == strip(b.out));
  CHECK(a.out.find("elapsed:") != std::string::npos);
}

TEST_CASE("arrangement input file and exact character literals") {
  const std::string path = "input_arrangement_test.json";
  {
    std::ofstream out(path);
    out << to_json(family("monomial_deletion", 2)).dump();
  }
  const Run lat = cli("lattice --input " + path + " --format json");
  REQUIRE(lat.status == 0);
  CHECK(json::parse(lat.out)["results"]["poincare"] == json::array({1, 8, 19, 12}));
  // Torsion point of C_1 at u = zeta(6)^2: (u^2, u^-2, -1, -1, -u^-1, -u^-1, u, u).
  const std::string t =
      R"x('{"coords": ["zeta(3)^2", "zeta(3)", "-1", "-1", "-zeta(3)^2", "-zeta(3)^2", "zeta(3)", "zeta(3)"]}')x";
  const Run sig = cli("sigma-test --input " + path + " --character " + t + " --format json");
  REQUIRE(sig.status == 0);
  const json j = json::parse(sig.out);
  CHECK(j["results"]["route"] == "fox");
  CHECK(j["results"]["member"] == true);
  std::remove(path.c_str());
}

}
