#include "dca/json_io.hpp"

#include <fstream>

#include "dca/errors.hpp"

namespace dca {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw input_error("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw input_error(std::string("missing field \"") + key + "\"");
    return *it;
}

long long int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw input_error(std::string("field \"") + key +
                                                  "\" must be an integer");
    return v.get<long long>();
}

const Json& array_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) throw input_error(std::string("field \"") + key + "\" must be an array");
    return v;
}

int int_at(const Json& j, size_t idx) {
    if (!j.is_array() || j.size() <= idx || !j[idx].is_number_integer())
        throw input_error("expected an integer array entry");
    return j[idx].get<int>();
}

}  // namespace

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON");
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json(text);
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

Rat rat_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return Rat(j.get<long long>());
        if (j.is_string()) return Rat::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw input_error(std::string("bad rational: ") + e.what());
    }
    throw input_error("expected a rational as \"p/q\" or integer");
}

ExtRat extrat_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return ExtRat(j.get<long long>());
        if (j.is_string()) return ExtRat::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw input_error(std::string("bad rational: ") + e.what());
    }
    throw input_error("expected an extended rational");
}

Graph graph_from_json(const Json& j) {
    int n = (int)int_field(j, "n");
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : array_field(j, "edges")) edges.push_back({int_at(e, 0), int_at(e, 1)});
    std::vector<Rat> lengths;
    if (j.contains("lengths"))
        for (const Json& l : array_field(j, "lengths")) lengths.push_back(rat_from_json(l));
    return Graph(n, std::move(edges), std::move(lengths));
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    Json out{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
    if (!g.unit_lengths()) {
        Json lengths = Json::array();
        for (int e = 0; e < g.edge_count(); ++e) lengths.push_back(g.length(e).str());
        out["lengths"] = std::move(lengths);
    }
    return out;
}

FinitePoset poset_from_json(const Json& j) {
    int n = (int)int_field(j, "elements");
    std::vector<std::pair<int, int>> hasse;
    for (const Json& e : array_field(j, "hasse")) hasse.push_back({int_at(e, 0), int_at(e, 1)});
    return FinitePoset(n, std::move(hasse));
}

Json poset_to_json(const FinitePoset& p) {
    Json hasse = Json::array();
    for (auto [lo, hi] : p.hasse()) hasse.push_back(Json::array({lo, hi}));
    return Json{{"elements", p.size()}, {"hasse", std::move(hasse)}};
}

std::vector<ExtRat> table_from_json(const Json& j) {
    std::vector<ExtRat> values;
    for (const Json& v : array_field(j, "values")) values.push_back(extrat_from_json(v));
    return values;
}

Json table_to_json(std::span<const ExtRat> values) {
    Json arr = Json::array();
    for (const ExtRat& v : values) arr.push_back(v.str());
    return Json{{"values", std::move(arr)}};
}

FlowNetwork network_from_json(const Json& j) {
    int n = (int)int_field(j, "n");
    std::vector<FlowEdge> edges;
    for (const Json& e : array_field(j, "edges"))
        edges.push_back({(int)int_field(e, "u"), (int)int_field(e, "v"),
                         rat_from_json(field(e, "lo")), extrat_from_json(field(e, "hi"))});
    return FlowNetwork(n, std::move(edges));
}

Json network_to_json(const FlowNetwork& net) {
    Json edges = Json::array();
    for (const FlowEdge& e : net.edges())
        edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"lo", e.lo.str()}, {"hi", e.hi.str()}});
    return Json{{"n", net.node_count()}, {"edges", std::move(edges)}};
}

MultiflowInstance mcmf_from_json(const Json& j) {
    int n = (int)int_field(j, "n");
    std::vector<MultiflowEdge> edges;
    for (const Json& e : array_field(j, "edges"))
        edges.push_back({(int)int_field(e, "u"), (int)int_field(e, "v"), int_field(e, "cap"),
                         int_field(e, "cost")});
    std::vector<TerminalDemand> terminals;
    for (const Json& t : array_field(j, "terminals"))
        terminals.push_back({(int)int_field(t, "node"), int_field(t, "demand")});
    return MultiflowInstance(n, std::move(edges), std::move(terminals));
}

Json mcmf_to_json(const MultiflowInstance& inst) {
    Json edges = Json::array();
    for (const MultiflowEdge& e : inst.edges())
        edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"cap", e.cap}, {"cost", e.cost}});
    Json terminals = Json::array();
    for (const TerminalDemand& t : inst.terminals())
        terminals.push_back(Json{{"node", t.node}, {"demand", t.demand}});
    return Json{{"n", inst.node_count()},
                {"edges", std::move(edges)},
                {"terminals", std::move(terminals)}};
}

Json potential_to_json(const Potential& p) {
    Json arr = Json::array();
    for (const StarVertex& x : p) {
        if (x.is_center())
            arr.push_back(Json::array({"O", 0}));
        else
            arr.push_back(Json::array({x.ray, x.t}));
    }
    return arr;
}

Potential potential_from_json(const Json& j) {
    if (!j.is_array()) throw input_error("potential must be an array");
    Potential p;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 2) throw input_error("potential entry must be a pair");
        if (e[0].is_string()) {
            if (e[0].get<std::string>() != "O" || int_at(e, 1) != 0)
                throw input_error("center potential entries must be [\"O\", 0]");
            p.push_back({-1, 0});
        } else {
            p.push_back({int_at(e, 0), (long long)int_at(e, 1)});
        }
    }
    return p;
}

Json multiflow_to_json(const Multiflow& flow) {
    Json arr = Json::array();
    for (const FlowPath& fp : flow) {
        Json nodes = Json::array();
        for (int v : fp.nodes) nodes.push_back(v);
        arr.push_back(Json{{"nodes", std::move(nodes)}, {"value", fp.value.str()}});
    }
    return arr;
}

Multiflow multiflow_from_json(const Json& j) {
    if (!j.is_array()) throw input_error("paths must be an array");
    Multiflow flow;
    for (const Json& e : j) {
        FlowPath fp;
        for (const Json& v : array_field(e, "nodes")) {
            if (!v.is_number_integer()) throw input_error("path nodes must be integers");
            fp.nodes.push_back(v.get<int>());
        }
        fp.value = rat_from_json(field(e, "value"));
        flow.push_back(std::move(fp));
    }
    return flow;
}

Json mcmf_solution_to_json(const McmfResult& r) {
    return Json{{"cost", r.cost.str()},
                {"paths", multiflow_to_json(r.flow)},
                {"potential", potential_to_json(r.potential)},
                {"iterations", r.iterations}};
}

ZeroExtInstance zeroext_from_json(const Json& j) {
    Graph g = graph_from_json(field(j, "graph"));
    int n = (int)int_field(j, "n");
    if (n < 1) throw input_error("at least one variable required");
    std::vector<std::vector<Rat>> b(n, std::vector<Rat>(g.vertex_count(), Rat(0)));
    for (const Json& e : array_field(j, "b")) {
        if (!e.is_array() || e.size() != 3) throw input_error("pull entry must be [i, v, weight]");
        int i = int_at(e, 0), v = int_at(e, 1);
        if (i < 0 || i >= n || v < 0 || v >= g.vertex_count())
            throw input_error("pull entry out of range");
        b[i][v] = rat_from_json(e[2]);
    }
    std::vector<std::vector<Rat>> c(n, std::vector<Rat>(n, Rat(0)));
    for (const Json& e : array_field(j, "c")) {
        if (!e.is_array() || e.size() != 3)
            throw input_error("coupling entry must be [i, j, weight]");
        int i = int_at(e, 0), v = int_at(e, 1);
        if (i < 0 || i >= n || v < 0 || v >= n) throw input_error("coupling entry out of range");
        c[i][v] = c[v][i] = rat_from_json(e[2]);
    }
    return ZeroExtInstance(std::move(g), n, std::move(b), std::move(c));
}

Json zeroext_to_json(const ZeroExtInstance& inst) {
    Json b = Json::array();
    for (int i = 0; i < inst.variables(); ++i)
        for (int v = 0; v < inst.graph().vertex_count(); ++v)
            if (!(inst.pull(i, v) == Rat(0)))
                b.push_back(Json::array({i, v, inst.pull(i, v).str()}));
    Json c = Json::array();
    for (int i = 0; i < inst.variables(); ++i)
        for (int v = i + 1; v < inst.variables(); ++v)
            if (!(inst.coupling(i, v) == Rat(0)))
                c.push_back(Json::array({i, v, inst.coupling(i, v).str()}));
    return Json{{"graph", graph_to_json(inst.graph())},
                {"n", inst.variables()},
                {"b", std::move(b)},
                {"c", std::move(c)}};
}

GridFnFile gridfn_from_json(const Json& j) {
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) throw input_error("field \"kind\" must be a string");
    std::string k = kind.get<std::string>();
    if (k == "tree_grid") {
        GridFnFile f{graph_from_json(field(j, "tree")), std::nullopt,
                     (int)int_field(j, "black_rep"), 0, (int)int_field(j, "n"),
                     table_from_json(j)};
        return f;
    }
    if (k == "twisted_grid") {
        GridFnFile f{graph_from_json(field(j, "g")), graph_from_json(field(j, "h")),
                     (int)int_field(j, "black_g"), (int)int_field(j, "black_h"),
                     (int)int_field(j, "n"), table_from_json(j)};
        return f;
    }
    throw input_error("unknown grid kind: " + k);
}

Json gridfn_to_json(const GridFnFile& f) {
    Json out = table_to_json(f.values);
    out["n"] = f.n;
    if (f.h) {
        out["kind"] = "twisted_grid";
        out["g"] = graph_to_json(f.g);
        out["h"] = graph_to_json(*f.h);
        out["black_g"] = f.black_g;
        out["black_h"] = f.black_h;
    } else {
        out["kind"] = "tree_grid";
        out["tree"] = graph_to_json(f.g);
        out["black_rep"] = f.black_g;
    }
    return out;
}

}  // namespace dca
