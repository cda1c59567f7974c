#ifndef CGK_SERIALIZE_HPP
#define CGK_SERIALIZE_HPP

#include "json.hpp"

#include "cgk/invariants.hpp"
#include "cgk/reps.hpp"
#include "cgk/singular.hpp"

namespace cgk {

using Json = nlohmann::ordered_json;

/// {"h": int, "a": [ints], "b": [ints]}
Json to_json(const PbwMonomial& m);
PbwMonomial monomial_from_json(const Json& j);

/// [{"monomial": {...}, "coef": "<scalar>"}, ...]
Json to_json(const ModuleVector& v);
ModuleVector module_vector_from_json(const Json& j);

/// [{"coef": "<polynomial>", "partials": {"t": 1, "x0": 2}}, ...]
Json to_json(const DiffOp& op);
DiffOp diffop_from_json(const Json& j, const VarLayout& layout);

Json to_json(const Weight& w);
Json to_json(const SingularReport& r);
Json to_json(const SearchResult& r);
Json to_json(const std::vector<RepFailure>& failures);
Json to_json(const std::vector<IntertwiningEntry>& entries);
Json to_json(const std::vector<JacobiFailure>& failures);

}  // namespace cgk

#endif  // CGK_SERIALIZE_HPP
