#pragma once

#include <json.hpp>

#include "boxball/bbs.hpp"
#include "boxball/core.hpp"
#include "boxball/greene.hpp"
#include "boxball/knuth.hpp"
#include "boxball/rs.hpp"
#include "boxball/verify.hpp"

// JSON encodings shared by the CLI and the Python bindings. Permutations,
// partitions and tableaux are plain arrays; a state is
// {"offset": int, "content": [int|null, ...]}.
namespace boxball {

using Json = nlohmann::json;

Json to_json(const Permutation& w);
Json to_json(const Partition& p);
Json to_json(const Tableau& t);
Json to_json(const BbsState& s);
Json to_json(const SkewArray& a);
Json to_json(const RsPair& pq);
Json to_json(const GreeneProfile& g);
Json to_json(const KnuthMoveLabel& l);
Json to_json(const KnuthClassGraph& g);
Json to_json(const VerificationReport& r);

Permutation permutation_from_json(const Json& j);
Partition partition_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
BbsState state_from_json(const Json& j);

}  // namespace boxball
