#pragma once

#include <string>

#include "json.hpp"

#include "jbt/element.hpp"
#include "jbt/linear_map.hpp"
#include "jbt/moebius.hpp"
#include "jbt/spectral.hpp"

namespace jbt {
inline namespace cli {

using Json = nlohmann::json;

// Factors serialize as a tag-union:
//   {"kind":"matrix","rows":p,"cols":q}
//   {"kind":"commutative","dim":n}
//   {"kind":"direct-sum","parts":[...]}
// The reader also accepts the compact string form ("matrix:2x3", ...).
Json factor_to_json(const Factor& f);
Factor factor_from_json(const Json& j);

// {"factor": ..., "coords": [[re,im], ...]}
Json element_to_json(const Element& x);
Element element_from_json(const Json& j);

// {"factor": ..., "matrix": [[[re,im], ...], ...]} (rows of the dim x dim matrix)
Json linear_map_to_json(const LinearMap& m);
LinearMap linear_map_from_json(const Json& j);

// {"lambdas": [...], "frame": [element, ...]}
Json spectral_to_json(const SpectralData& s);

// {"isometry": linear map, "base": element}
Json automorphism_to_json(const BallAutomorphism& g);
BallAutomorphism automorphism_from_json(const Json& j);

} // namespace cli
} // namespace jbt
