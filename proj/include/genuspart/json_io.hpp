#pragma once

#include <json.hpp>

#include "genuspart/enumerate.hpp"
#include "genuspart/genus_gf.hpp"
#include "genuspart/partition.hpp"
#include "genuspart/reduce.hpp"

namespace genuspart {

// {"n": 10, "parts": [[1,3,4,6,7],[2,5,9],[8],[10]]}
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// {"n": 4, "total": 15, "counts": [{"type": "[1^4]", "genus": 0, "count": 1}, ...]}
nlohmann::json to_json(const GenusCountTable& t);

// {"initial": ..., "genus": 1, "steps": [{"kind": ..., "removed": [...],
//  "before_n": ..., "after_n": ...}], "reduced": ..., "class": "primitive"}
nlohmann::json to_json(const ReductionTrace& t);

// [{"representative": ..., "stabilizer_order": 2, "orbit_length": 2}, ...]
nlohmann::json to_json(const std::vector<OrbitRecord>& orbits);

// {"rows": [{"n": 6, "two_vertices_only": 0, ..., "total": 1}, ...]}
nlohmann::json to_json(const CensusTable& t);

// {"order": 12, "coefficients": ["0", "1", "3/2", ...]} (exact strings)
nlohmann::json to_json(const Series<Rat>& s);
// same, coefficients rendered as polynomial strings
nlohmann::json to_json(const Series<Poly>& s);

// "1 + 2*x^2 + (k1^2 + k2)*x^3 + ..." — zero terms skipped, "0" if all vanish
std::string series_string(const Series<Rat>& s);
std::string series_string(const Series<Poly>& s);

}  // namespace genuspart
