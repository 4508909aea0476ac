#pragma once

#include "json.hpp"

#include "colie/fields2d.hpp"
#include "colie/parse.hpp"

namespace colie {

using Json = nlohmann::json;

/// Canonical form: array of {"coeff", "necklace"} objects, already ordered
/// by (length, lexicographic necklace). Equal elements serialize equally.
Json element_json(const CoinvElem& a);

/// Array of {"coeff", "word"} objects in (length, lexicographic) order.
Json tensor_json(const TensorElem& t);

Json pq_json(const PQPair& pq);

/// Sorted keys, UTF-8, newline-terminated.
std::string dump_json(const Json& j);

} // namespace colie
