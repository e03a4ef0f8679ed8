#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "dca/flow.hpp"
#include "dca/graph.hpp"
#include "dca/mcmf.hpp"
#include "dca/poset.hpp"
#include "dca/zeroext.hpp"

namespace dca {

using Json = nlohmann::json;

// File and string parsing; malformed input raises input_error.
Json load_json_file(const std::string& path);
Json parse_json(const std::string& text);
void save_json_file(const std::string& path, const Json& j);

// Rationals travel as "p/q" strings ("inf"/"-inf" for the extended ends);
// plain JSON integers are also accepted on input.
Rat rat_from_json(const Json& j);
ExtRat extrat_from_json(const Json& j);

// {"n": int, "edges": [[u,v],...], "lengths": optional ["p/q",...]}
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

// {"elements": int, "hasse": [[lo,hi],...]}
FinitePoset poset_from_json(const Json& j);
Json poset_to_json(const FinitePoset& p);

// {"values": ["p/q" | "inf", ...]} in row-major product order.
std::vector<ExtRat> table_from_json(const Json& j);
Json table_to_json(std::span<const ExtRat> values);

// {"n": int, "edges": [{"u","v","lo","hi"},...]}
FlowNetwork network_from_json(const Json& j);
Json network_to_json(const FlowNetwork& net);

// {"n": int, "edges": [{"u","v","cap","cost"},...],
//  "terminals": [{"node","demand"},...]}
MultiflowInstance mcmf_from_json(const Json& j);
Json mcmf_to_json(const MultiflowInstance& inst);

// Potentials as [["O",0] | [ray,t], ...]; paths as {"nodes","value"}.
Json potential_to_json(const Potential& p);
Potential potential_from_json(const Json& j);
Json multiflow_to_json(const Multiflow& flow);
Multiflow multiflow_from_json(const Json& j);
Json mcmf_solution_to_json(const McmfResult& r);

// {"graph": Graph, "n": int, "b": [[i,v,"p/q"],...], "c": [[i,j,"p/q"],...]}
ZeroExtInstance zeroext_from_json(const Json& j);
Json zeroext_to_json(const ZeroExtInstance& inst);

// Grid function files:
// {"kind": "tree_grid", "tree": Graph, "black_rep": int, "n": int,
//  "values": [...]}  or
// {"kind": "twisted_grid", "g": Graph, "h": Graph, "black_g": int,
//  "black_h": int, "n": int, "values": [...]}
struct GridFnFile {
    Graph g;
    std::optional<Graph> h;  // present exactly for twisted grids
    int black_g = 0;
    int black_h = 0;
    int n = 1;
    std::vector<ExtRat> values;
};
GridFnFile gridfn_from_json(const Json& j);
Json gridfn_to_json(const GridFnFile& f);

}  // namespace dca
