#pragma once

#include <nlohmann/json.hpp>

#include "orbitq/geometry.hpp"
#include "orbitq/ktheory.hpp"
#include "orbitq/quantize.hpp"
#include "orbitq/repring.hpp"
#include "orbitq/rootdata.hpp"

// JSON wire formats. Output uses ordered_json so that keys appear in the
// documented order; readers accept any key order. Parse failures throw
// orbitq::Error with ParseError and the offending field path.

namespace orbitq {

using Json = nlohmann::ordered_json;

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j, const std::string& path = "");

/// [{weight, coeff}, ...] sorted lexicographically by weight.
Json to_json(const RepRingElement& x);
RepRingElement rep_ring_from_json(const RootDatum& rd, const Json& j, const std::string& path = "");

Json to_json(const FormalCharacter& chi);

/// {"degree": 0|1, "terms": [{weight, coeff}, ...]}
Json to_json(const KTheoryClass& y);
KTheoryClass ktheory_class_from_json(const Json& j, const std::string& path = "");

/// {"series": "principal"|"discrete", "parameter": [...], "sign": +-1}
Json to_json(const SeriesLabel& label);
SeriesLabel series_label_from_json(const Json& j, const std::string& path = "");

/// {"cartan": "...", "factors": [[...], ...]}
Json to_json(const OrbitProductManifold& n);
OrbitProductManifold orbit_product_from_json(const Json& j, const std::string& path = "");

Json to_json(const RootDatum& rd);
Json to_json(const GroupDescriptor& g);

Json to_json(const PullbackReport& r);
Json to_json(const DegeneracyReport& r);

}  // namespace orbitq
