#pragma once

// JSON views of the library's results. Every field element is written as an exact string.

#include <string>
#include <vector>

#include <json.hpp>

#include "bqa/classify.hpp"
#include "bqa/structure.hpp"

namespace bqa {

using Json = nlohmann::ordered_json;

Json to_json(const FieldValue& v);
Json to_json(const Transform& t);
Json to_json(const ConsistencyResidues& r);
Json to_json(const OrbitInvariant& inv);
Json to_json(const LieInvariants& inv);
Json to_json(const Bq3& A);
Json to_json(const BqPresentation& p);
Json to_json(const CanonicalForm& form, const std::vector<Transform>& trace);
Json to_json(const GwaData& g, const std::optional<Affine>& alpha, const StructureCheck& check);

std::string dump(const Json& j, bool pretty);

}  // namespace bqa
