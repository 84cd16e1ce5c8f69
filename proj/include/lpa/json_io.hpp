#pragma once

#include <json.hpp>

#include "lpa/algebra.hpp"
#include "lpa/digraph.hpp"
#include "lpa/dimfun.hpp"
#include "lpa/quotient.hpp"
#include "lpa/repbuild.hpp"

namespace lpa {

using ojson = nlohmann::ordered_json;

// {"v": 1, "w": 0}; every vertex must appear exactly once.
ojson dimfun_to_json(const Digraph& g, const DimensionFunction& d);
DimensionFunction dimfun_from_json(const Digraph& g, const nlohmann::json& j);

// {"dims": {...}, "arrows": {"e": [["1", "0"]]}, "duals": {...}} with
// entries written as "p/q". Reading also accepts JSON integers.
ojson rep_to_json(const Digraph& g, const QuiverRep& r);
QuiverRep rep_from_json(const Digraph& g, const nlohmann::json& j);

ojson matrix_to_json(const Matrix& m);

ojson anchor_to_json(const Digraph& g, const SinkOrCycle& a);
// {"summands": [{"kind": "cycle", "anchor": "v", "n": 1, ...}]}
ojson summands_to_json(const Digraph& g, const std::vector<Summand>& summands);

ojson grade_to_json(const Digraph& g, const Grade& gr);
ojson element_to_json(const Digraph& g, const Element& a);

}  // namespace lpa
