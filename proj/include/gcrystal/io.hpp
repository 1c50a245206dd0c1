#pragma once

#include <string>

#include "gcrystal/suites.hpp"
#include "gcrystal/ultradisc.hpp"
#include "json.hpp"

namespace gc {

// {"type":"d1","n":4,"model":"V","L":"2","coords":{"x1":"1",...}}
nlohmann::json point_to_json(const GCPoint& p);
// Coordinates are read by name; a B point must satisfy its constraint.
GCPoint point_from_json(const nlohmann::json& j);

// {"type":"d1","n":4,"model":"B","level":1,"coords":[...]}
nlohmann::json lattice_to_json(const LatticePoint& p);
LatticePoint lattice_from_json(const nlohmann::json& j);

// One JSON object per check, in key order.
std::string report_jsonl(const Report& r, const nlohmann::json& context);

}  // namespace gc
