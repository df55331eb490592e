#include "hyperloc/json_io.hpp"

#include <stdexcept>

namespace hyperloc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("malformed JSON: " + what);
}

}  // namespace

json to_json(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(detail::rational_to_string(q));
  return json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (j.is_string()) return parse_cyclotomic(j.get<std::string>());
  if (j.is_number_integer()) return Cyclotomic(j.get<long long>());
  require(j.is_object() && j.contains("conductor") && j.contains("coeffs"), "cyclotomic needs conductor and coeffs");
  const int n = j.at("conductor").get<int>();
  std::vector<Rational> raw;
  for (const auto& c : j.at("coeffs")) {
    raw.push_back(c.is_string() ? detail::parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
  }
  require(static_cast<int>(raw.size()) == detail::euler_phi(n), "coefficient count must be phi(conductor)");
  return Cyclotomic::normalize(std::move(raw), n);
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json{{"coeff", to_json(c)}, {"u", e.u}, {"v", e.v}});
  return out;
}

Poly poly_from_json(const json& j) {
  require(j.is_array(), "polynomial must be a list of terms");
  Poly p;
  for (const auto& t : j) {
    const int u = t.value("u", 0);
    const int v = t.value("v", 0);
    require(u >= 0 && v >= 0, "polynomial exponents must be nonnegative");
    p += Poly::monomial(cyclotomic_from_json(t.at("coeff")), u, v);
  }
  return p;
}

json to_json(const RatFunc& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RatFunc ratfunc_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return RatFunc(cyclotomic_from_json(j));
  require(j.is_object() && j.contains("num"), "rational function needs num");
  Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly(1);
  require(!den.is_zero(), "zero denominator");
  return RatFunc(poly_from_json(j.at("num")), den);
}

json to_json(const Arrangement& a) {
  json hs = json::array();
  for (const auto& h : a.hyperplanes()) {
    json normal = json::array();
    for (const auto& c : h.normal) normal.push_back(to_json(c));
    hs.push_back(json{{"label", h.label}, {"normal", normal}, {"constant", to_json(h.constant)}});
  }
  return json{{"name", a.name()}, {"ambient_dim", a.ambient_dim()}, {"conductor", a.conductor()}, {"hyperplanes", hs}};
}

Arrangement arrangement_from_json(const json& j) {
  require(j.is_object() && j.contains("ambient_dim") && j.contains("hyperplanes"),
          "arrangement needs ambient_dim and hyperplanes");
  std::vector<Hyperplane> hs;
  int pos = 0;
  for (const auto& h : j.at("hyperplanes")) {
    ++pos;
    Hyperplane out;
    out.label = h.value("label", "L" + std::to_string(pos));
    for (const auto& c : h.at("normal")) out.normal.push_back(cyclotomic_from_json(c));
    out.constant = h.contains("constant") ? cyclotomic_from_json(h.at("constant")) : Cyclotomic();
    hs.push_back(std::move(out));
  }
  return Arrangement(j.value("name", std::string("input")), j.at("ambient_dim").get<int>(), std::move(hs),
                     j.value("conductor", 1));
}

json flat_to_json(const Flat& f, const Arrangement& a) {
  json labels = json::array();
  for (int i : f.indices) labels.push_back(a[i].label);
  return json{{"rank", f.rank}, {"indices", f.indices}, {"labels", labels}};
}

json to_json(const Character& t) {
  json coords = json::array();
  for (const auto& c : t.coords) coords.push_back(to_json(c));
  return json{{"host", t.host}, {"coords", coords}};
}

Character character_from_json(const json& j) {
  require(j.is_object() && j.contains("coords"), "character needs coords");
  Character t;
  t.host = j.value("host", std::string());
  for (const auto& c : j.at("coords")) t.coords.push_back(ratfunc_from_json(c));
  return t;
}

json weight_to_json(const Weight& w) {
  json lambda = json::array();
  for (const auto& c : w) lambda.push_back(to_json(c));
  return json{{"lambda", lambda}};
}

Weight weight_from_json(const json& j) {
  require(j.is_object() && j.contains("lambda"), "weight needs lambda");
  Weight w;
  for (const auto& c : j.at("lambda")) w.push_back(ratfunc_from_json(c));
  return w;
}

json partition_to_json(const Partition& p) {
  json out = json::array();
  for (const auto& b : p) out.push_back(b);
  return out;
}

json to_json(const ParamSubtorus& s) {
  json translation = json::array();
  json exponents = json::array();
  for (const auto& c : s.translation) translation.push_back(to_json(c));
  for (const auto& e : s.exponents) exponents.push_back(json{{"u", e.u}, {"v", e.v}});
  return json{{"host", s.host}, {"dimension", s.dimension}, {"translation", translation}, {"exponents", exponents}};
}

json to_json(const Presentation& p) {
  return json{{"generators", p.generators}, {"relators", p.relators}};
}

Presentation presentation_from_json(const json& j) {
  require(j.is_object() && j.contains("generators") && j.contains("relators"),
          "presentation needs generators and relators");
  Presentation p;
  p.generators = j.at("generators").get<std::vector<std::string>>();
  const int n = static_cast<int>(p.generators.size());
  for (const auto& r : j.at("relators")) {
    Word w = r.get<Word>();
    for (int x : w) require(x != 0 && std::abs(x) <= n, "relator letter out of range");
    p.relators.push_back(std::move(w));
    p.relator_source.push_back(-1);
  }
  return p;
}

json to_json(const WiringDiagram& wd) {
  json lines = json::array();
  for (const auto& l : wd.lines) lines.push_back(json{{"slope", to_json(l.slope)}, {"intercept", to_json(l.intercept)}});
  json events = json::array();
  for (const auto& e : wd.events) {
    events.push_back(json{{"x", to_json(e.x)}, {"lines", e.lines}, {"first", e.first}, {"order_before", e.order_before}});
  }
  return json{{"shear", detail::rational_to_string(wd.shear)},
              {"lines", lines},
              {"initial_order", wd.initial_order},
              {"events", events}};
}

}  // namespace hyperloc
