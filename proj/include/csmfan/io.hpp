#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "csmfan/csm.hpp"

namespace csmfan {

using json = nlohmann::json;

// matroid document {"ground_size": n+1, "bases": [[...],...], "name"?}
// bases are emitted as sorted element arrays in lexicographic order
json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const json& doc);

// dispatches on document shape: bases, graph {"vertices","edges"}, or
// matrix {"field","matrix"} documents all produce a matroid
Matroid matroid_from_document(const json& doc);

// {"terms": [{"i","j","c"},...]} sorted by (i,j)
json tutte_to_json(const TuttePolynomial& t);
TuttePolynomial tutte_from_json(const json& doc);

// {"ambient", "dim", "cones": [{"rays": [[...]], "weight"},...]}
json fan_to_json(const WeightedFan& fan);
WeightedFan fan_from_json(const json& doc);

json flag_to_json(const FlagOfFlats& flag);       // array of sorted element arrays
std::string render_flag(const FlagOfFlats& flag); // "∅ ⊂ {0} ⊂ {0,1,2}"

// {"points": [{"coords": ["p/q",...], "mult"},...], "degree"}
json intersection_report_to_json(const std::vector<IntersectionPoint>& points);

json balance_report_to_json(const BalanceReport& report);

// {"matroid", "rank", "rows": [{"k","geometric","combinatorial","tutte","pass"},...]}
json theorem_report_to_json(const TheoremReport& report);

}  // namespace csmfan
