#pragma once

#include <string>

#include <json.hpp>

#include "ghkit/assouad.hpp"
#include "ghkit/covers.hpp"
#include "ghkit/embeddings.hpp"
#include "ghkit/gromov_hausdorff.hpp"
#include "ghkit/hausdorff1d.hpp"
#include "ghkit/metric.hpp"

namespace ghkit {

using json = nlohmann::ordered_json;

// Shared file schemas:
//   point set     {"points": [x, ...]}          (sorted on load; duplicates rejected)
//   metric space  {"n": k, "matrix": [[...], ...]}
//   sample        {"elements": [[x, ...], ...]}
//   cover         {"r": r, "bound": b, "classes": [[[idx, ...], ...], ...]}
// Malformed documents raise InvalidInput.

json read_json_file(const std::string& path);

Point1DSet point_set_from_json(const json& j);
json to_json(const Point1DSet& p);

Network network_from_json(const json& j);
/// Accepts either a metric-space document or a point-set document.
FiniteMetricSpace metric_space_from_json(const json& j);
json to_json(const Network& m);

json to_json(const Alignment& a);
json to_json(const GHResult& r);

SampledSpace sample_from_json(const json& j);
json to_json(const SampledSpace& s);
CoverFamily cover_from_json(const json& j);
json to_json(const CoverFamily& c);
json to_json(const CoverReport& r);

json to_json(const ControlReport& r);
json to_json(const WitnessFamily& w);
json to_json(const WitnessReport& r);

}  // namespace ghkit
