#ifndef RESATLAS_JSON_IO_HPP
#define RESATLAS_JSON_IO_HPP

#include "resatlas/numverify.hpp"
#include "resatlas/residuerep.hpp"
#include "resatlas/resonances.hpp"

#include <json.hpp>

namespace resatlas {

// Canonical JSON: insertion-ordered keys, rationals as "p/q" strings, so that
// parse + dump round-trips byte-identically.
using json = nlohmann::ordered_json;

std::string dump_canonical(const json& j);

json to_json(const GroupSpec& spec);
json to_json(const Weight& w);
json rat_array(const RatVec& v);
json to_json(const GroupConstants& c);
json to_json(const MTypeParam& sigma);
json to_json(const PlancherelDensity& d);
json to_json(const std::vector<PoleRecord>& poles);
json to_json(const ResonanceAtlas& atlas);
json to_json(const ResidueRepInfo& info);
json to_json(const OrbitInfo& orbit);
json to_json(const QuadratureReport& rep);

GroupSpec group_spec_from_json(const json& j);

}  // namespace resatlas

#endif
