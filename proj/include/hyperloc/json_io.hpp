#ifndef HYPERLOC_JSON_IO_HPP
#define HYPERLOC_JSON_IO_HPP

#include <json.hpp>

#include "hyperloc/arrangement.hpp"
#include "hyperloc/local_systems.hpp"
#include "hyperloc/os_algebra.hpp"
#include "hyperloc/presentation.hpp"
#include "hyperloc/wiring.hpp"

namespace hyperloc {

using json = nlohmann::ordered_json;

/// {"conductor": N, "coeffs": ["p/q", ...]}. Parsing also accepts a string
/// literal such as "-3/2*zeta(4)^3".
json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const json& j);

/// List of terms {"coeff", "u", "v"}.
json to_json(const Poly& p);
Poly poly_from_json(const json& j);

/// {"num": [terms], "den": [terms]}. Parsing also accepts a cyclotomic
/// literal string.
json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

/// {"name", "ambient_dim", "conductor", "hyperplanes": [{"label", "normal", "constant"}]}
json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const json& j);

json flat_to_json(const Flat& f, const Arrangement& a);

/// {"host", "coords": [RatFunc]}
json to_json(const Character& t);
Character character_from_json(const json& j);

/// {"lambda": [RatFunc]}
json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j);

json partition_to_json(const Partition& p);

json to_json(const ParamSubtorus& s);

/// {"generators": [names], "relators": [signed index lists]}
json to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json to_json(const WiringDiagram& wd);

}  // namespace hyperloc

#endif  // HYPERLOC_JSON_IO_HPP
