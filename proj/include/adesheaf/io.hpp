// io.hpp
//
// JSON and DOT serialization.
//   config:   {"kind":"D4","edges":[[1,3],[2,3],[3,4]]}
//   cycle:    {"kind":"D4","mult":[1,1,2,1]}
//   bundle:   {"support":[1,2,3],"deg":{"1":2,"2":-2,"3":0}}
//   presentation: {"config":"D4","F":[bundle...],"G":[bundle...],
//                  "epsilon":[[1],[1]]}   (epsilon optional: universal)
// Rational entries are written as integers when integral, else "p/q".
#pragma once

#include <string>

#include <json.hpp>

#include "adesheaf/extension_lab.hpp"
#include "adesheaf/poset_engine.hpp"

namespace ade {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const CurveConfig& config);
Json to_json(const CurveConfig& config, const Cycle& z);
std::string to_dot(const CurveConfig& config);

Json to_json(const LineBundle& bundle);
/// Throws InvalidInput on malformed input.
LineBundle bundle_from_json(const CurveConfig& config, const Json& j);

Json to_json(const ExtPresentation& pres);
ExtPresentation presentation_from_json(const Json& j);

Json to_json(const HomSpace& space, const CurveConfig& config);
Json to_json(const Ext1Germs& germs);
Json to_json(const RigidityReport& report);
Json to_json(const DecompositionReport& report);
Json to_json(const EnumerationResult& result);
Json to_json(const BundlePoset& poset);

/// Parses inline JSON text, or reads the file at `text` when it does not
/// start with '{' or '['.
Json load_json(const std::string& text);

}  // namespace ade
