#include "hurwitz_atlas/serialization.hpp"

#include <map>

namespace hurwitz_atlas {

using nlohmann::json;

json series_to_json(const PowerSeries& s) {
    json coeffs = json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(rat_to_string(s[n]));
    return coeffs;
}

PowerSeries series_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw atlas_error("bad_input", "coefficient list must be a nonempty array");
    PowerSeries s(static_cast<int>(j.size()) - 1);
    for (size_t n = 0; n < j.size(); ++n) s.set(static_cast<int>(n), parse_rat(j[n].get<std::string>()));
    return s;
}

std::string series_to_csv(const PowerSeries& s) {
    std::string out = "n,numerator,denominator\n";
    for (int n = 0; n <= s.order(); ++n) {
        out += std::to_string(n) + "," + s[n].get_num().get_str() + "," + s[n].get_den().get_str() + "\n";
    }
    return out;
}

namespace {

json laurent_to_json(const LaurentMap& p) {
    json out = json::object();
    for (const auto& [e, c] : p) out[std::to_string(e)] = rat_to_string(c);
    return out;
}

LaurentMap laurent_from_json(const json& j) {
    LaurentMap out;
    for (const auto& [key, value] : j.items())
        laurent_add(out, std::stoi(key), parse_rat(value.get<std::string>()));
    return out;
}

}  // namespace

json aelement_to_json(const AElement& a) {
    json out;
    out["X"] = laurent_to_json(a.terms());
    return out;
}

AElement aelement_from_json(const json& j) { return AElement(laurent_from_json(j.at("X"))); }

json closed_form_to_json(const ClosedForm& cf) {
    json out;
    out["P"] = laurent_to_json(cf.p);
    out["Q"] = laurent_to_json(cf.q);
    out["n0"] = cf.n0;
    json exceptions = json::array();
    for (const auto& [n, v] : cf.exceptions) exceptions.push_back(json::array({n, rat_to_string(v)}));
    out["exceptions"] = exceptions;
    return out;
}

json asymptotic_to_json(const AsymptoticTerm& term) {
    json out;
    out["alpha"] = rat_to_string(term.alpha);
    out["c_gauss"] = rat_to_string(term.c_gauss);
    out["c_plain"] = rat_to_string(term.c_plain);
    return out;
}

json bracket_table_to_json(const BracketTable& table) {
    json out;
    out["genus"] = table.genus();
    if (table.pure_degree())
        out["degree"] = *table.pure_degree();
    else
        out["degree"] = "mixed";
    json values = json::object();
    for (const auto& [m, v] : table.initial_values()) values[monomial_to_string(m)] = rat_to_string(v);
    out["values"] = values;
    return out;
}

BracketTable bracket_table_from_json(const json& j) {
    const int genus = j.at("genus").get<int>();
    std::optional<int> degree;
    if (j.contains("degree") && j.at("degree").is_number_integer()) degree = j.at("degree").get<int>();
    std::map<Monomial, Rat> values;
    for (const auto& [key, value] : j.at("values").items())
        values[monomial_from_string(key)] = parse_rat(value.get<std::string>());
    return BracketTable(genus, degree, std::move(values));
}

json graph_to_json(const MultiGraph& g) {
    json vertices = json::array();
    std::vector<std::string> ids;
    int anon_counter = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        json vertex;
        std::string id;
        switch (g.vertex(v).kind) {
            case VertexKind::star:
                id = "*";
                vertex["kind"] = "star";
                break;
            case VertexKind::numbered:
                id = std::to_string(g.vertex(v).number);
                vertex["kind"] = "numbered";
                break;
            case VertexKind::anon:
                id = "a" + std::to_string(anon_counter++);
                vertex["kind"] = "anon";
                break;
        }
        vertex["id"] = id;
        ids.push_back(id);
        vertices.push_back(vertex);
    }
    // Halves are (vertex id, slot): slot counts the half-edges already
    // emitted at that vertex.
    std::vector<int> next_slot(static_cast<size_t>(g.vertex_count()), 0);
    json edges = json::array();
    for (auto [a, b] : g.edge_pairs()) {
        json half_a = json::array({ids[static_cast<size_t>(a)], next_slot[static_cast<size_t>(a)]++});
        json half_b = json::array({ids[static_cast<size_t>(b)], next_slot[static_cast<size_t>(b)]++});
        edges.push_back(json::array({half_a, half_b}));
    }
    json out;
    out["vertices"] = vertices;
    out["edges"] = edges;
    return out;
}

MultiGraph graph_from_json(const json& j) {
    std::vector<Vertex> verts;
    std::map<std::string, int> by_id;
    for (const auto& vertex : j.at("vertices")) {
        const std::string id = vertex.at("id").get<std::string>();
        const std::string kind = vertex.at("kind").get<std::string>();
        if (by_id.count(id)) throw atlas_error("bad_input", "duplicate vertex id '" + id + "'");
        by_id[id] = static_cast<int>(verts.size());
        if (kind == "star")
            verts.push_back(star_vertex());
        else if (kind == "numbered")
            verts.push_back(numbered_vertex(std::stoi(id)));
        else if (kind == "anon")
            verts.push_back(anon_vertex());
        else
            throw atlas_error("bad_input", "unknown vertex kind '" + kind + "'");
    }
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<std::string, int>, int> seen_halves;
    for (const auto& edge : j.at("edges")) {
        if (!edge.is_array() || edge.size() != 2) throw atlas_error("bad_input", "edge must pair two halves");
        std::pair<int, int> endpoints;
        for (size_t side = 0; side < 2; ++side) {
            const auto& half = edge[side];
            const std::string id = half.at(0).get<std::string>();
            const int slot = half.at(1).get<int>();
            if (!by_id.count(id)) throw atlas_error("bad_input", "edge references unknown vertex '" + id + "'");
            if (seen_halves.count({id, slot}))
                throw atlas_error("bad_input", "half-edge (" + id + "," + std::to_string(slot) + ") reused");
            seen_halves[{id, slot}] = 1;
            (side == 0 ? endpoints.first : endpoints.second) = by_id[id];
        }
        edges.push_back(endpoints);
    }
    return MultiGraph(std::move(verts), edges);
}

json catalog_to_json(const std::vector<NamedGraph>& catalog) {
    json graphs = json::array();
    for (const auto& entry : catalog) {
        json item = graph_to_json(entry.graph.graph);
        item["name"] = entry.name;
        item["p"] = entry.graph.p;
        graphs.push_back(item);
    }
    json out;
    out["graphs"] = graphs;
    return out;
}

std::vector<NamedGraph> catalog_from_json(const json& j) {
    std::vector<NamedGraph> out;
    for (const auto& item : j.at("graphs")) {
        NamedGraph entry;
        entry.name = item.value("name", "");
        const int p = item.value("p", 0);
        entry.graph = SimpleGraphH::checked(graph_from_json(item), p);
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace hurwitz_atlas
