#pragma once

#include <json.hpp>

#include "extalg/flag.hpp"
#include "extalg/galois.hpp"
#include "extalg/oracle.hpp"
#include "extalg/unified.hpp"

namespace extalg {

using nlohmann::json;

// Algebra documents: {"field": "<grammar>", "dim": n, "unit": [..],
// "table": [[[c]..]..]} with table[i][j] the coefficient list of e_i e_j and
// elements as canonical strings.
json algebra_to_json(const Algebra& A);
Algebra algebra_from_json(const json& j);

json datum_to_json(const ExtendingDatum& D);
ExtendingDatum datum_from_json(const json& j);

json matched_pair_to_json(const MatchedPair& mp);
MatchedPair matched_pair_from_json(const json& j);

json flag_datum_to_json(const Field& F, const FlagDatum& fd);
FlagDatum flag_datum_from_json(const Field& F, const json& j);

GroupPresentationInput group_input_from_json(const json& j);

/// {"algebra":.., "group":.., "action":[mat per g], "cocycle":[[vec]..]}
struct CrossedProductInput {
    Algebra A;
    GroupPresentationInput G;
    std::vector<Mat> action;
    std::vector<std::vector<Vec>> cocycle;
};
CrossedProductInput crossed_input_from_json(const json& j);

json group_to_json(const Field& F, const FiniteGroup& G);

json vec_to_json(const Field& F, const Vec& v);
Vec vec_from_json(const Field& F, const json& j);
json mat_to_json(const Field& F, const Mat& m);
Mat mat_from_json(const Field& F, const json& j);

}  // namespace extalg
