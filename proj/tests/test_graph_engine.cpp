#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hurwitz_atlas/multigraph.hpp"
#include "hurwitz_atlas/serialization.hpp"

using namespace hurwitz_atlas;

namespace {

// A decorated graph on the star plus vertices 1..n from an explicit edge list.
MultiGraph decorated(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Vertex> verts;
    verts.push_back(star_vertex());
    for (int i = 1; i <= n; ++i) verts.push_back(numbered_vertex(i));
    return MultiGraph(std::move(verts), edges);
}

}  // namespace

TEST_CASE("automorphism counts of the catalog") {
    CHECK(automorphism_count(catalog_h4().graph) == 8);
    CHECK(automorphism_count(catalog_h23().graph) == 4);
    CHECK(automorphism_count(catalog_h222().graph) == 4);
}

TEST_CASE("automorphism counts of small decorated graphs") {
    CHECK(automorphism_count(decorated(1, {{0, 1}})) == 1);
    CHECK(automorphism_count(decorated(1, {{0, 1}, {0, 1}})) == 2);
    CHECK(automorphism_count(decorated(1, {{1, 1}})) == 2);
    CHECK(automorphism_count(decorated(2, {{0, 1}, {1, 2}, {1, 2}, {2, 2}})) == 4);
}

TEST_CASE("automorphism count against the half-edge search") {
    CHECK(automorphism_count_half_edge_search(catalog_h4().graph) == 8);
    CHECK(automorphism_count_half_edge_search(catalog_h23().graph) == 4);

    std::mt19937 rng(31);
    std::uniform_int_distribution<int> vertex_count(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = vertex_count(rng);
        std::uniform_int_distribution<int> pick(0, n);
        std::vector<std::pair<int, int>> edges;
        const int edge_count = std::uniform_int_distribution<int>(0, 4)(rng);
        for (int e = 0; e < edge_count; ++e) {
            int a = pick(rng), b = pick(rng);
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        // Mix numbered and anonymous vertices.
        std::vector<Vertex> verts;
        verts.push_back(star_vertex());
        for (int i = 1; i <= n; ++i) {
            if (std::uniform_int_distribution<int>(0, 1)(rng))
                verts.push_back(numbered_vertex(i));
            else
                verts.push_back(anon_vertex());
        }
        const MultiGraph g(std::move(verts), edges);
        CHECK(automorphism_count(g) == automorphism_count_half_edge_search(g));
    }
}

TEST_CASE("disjoint unions multiply automorphism counts") {
    const MultiGraph a = decorated(2, {{1, 1}, {1, 2}, {1, 2}, {2, 2}});
    const MultiGraph b = decorated(4, {{1, 1}, {1, 2}, {1, 2}, {2, 2}, {3, 4}, {3, 4}, {0, 3}, {0, 4}});
    CHECK(automorphism_count(b) == automorphism_count(a) * Int(2));
}

TEST_CASE("simplification rejects a dangling path at the star") {
    const MultiGraph path = decorated(2, {{0, 1}, {1, 2}});
    CHECK_THROWS_WITH_AS(simplify(path, 0), "unsimplifiable component", atlas_error);
}

TEST_CASE("a two-loop vertex hanging at the star is already simple") {
    const MultiGraph g = decorated(1, {{0, 1}, {1, 1}, {1, 1}});
    const MultiGraph reduced = simplify(g, 0);
    CHECK(isomorphic_fixing_labels(reduced, catalog_h4().graph));
}

TEST_CASE("a chain spliced into a loop reduces back") {
    // H4 with one loop subdivided by three numbered valency-2 vertices.
    const MultiGraph g = decorated(4, {{0, 1}, {1, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
    const MultiGraph reduced = simplify(g, 0);
    CHECK(isomorphic_fixing_labels(reduced, catalog_h4().graph));
}

TEST_CASE("simplification is independent of the order of moves") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> vertex_count(2, 6);
    int accepted = 0;
    while (accepted < 50) {
        const int n = vertex_count(rng);
        std::uniform_int_distribution<int> pick(0, n);
        const int edge_count = std::uniform_int_distribution<int>(n, n + 4)(rng);
        std::vector<std::pair<int, int>> edges;
        for (int e = 0; e < edge_count; ++e) {
            int a = pick(rng), b = pick(rng);
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        const MultiGraph g = decorated(n, edges);
        const auto reference = try_simplify(g, 0);
        if (!reference) continue;
        ++accepted;
        const std::string reference_key = canonical_key(*reference);
        for (int run = 0; run < 10; ++run) {
            const MultiGraph shuffled = simplify_with_order(g, 0, rng);
            CHECK(canonical_key(shuffled) == reference_key);
        }
    }
}

TEST_CASE("extension brackets of H4 at one point") {
    const SimpleGraphH h4 = catalog_h4();
    CHECK(h_bracket(h4, {5}, 0) == make_rat(1, 8));
    CHECK(h_bracket(h4, {1}, 0) == 0);
}

TEST_CASE("extension series match the closed forms") {
    for (const auto& [name, graph] : genus2_catalog()) {
        INFO(name);
        const int order = name == "H222" ? 4 : 5;
        const PowerSeries enumerated = f_h_series_by_enumeration(graph, order);
        const PowerSeries closed = to_series(f_h_closed_form(graph), order);
        CHECK(enumerated == closed);
    }
}

TEST_CASE("closed form with a triple edge") {
    const MultiGraph triple({star_vertex(), anon_vertex()}, {{0, 1}, {0, 1}, {0, 1}});
    const SimpleGraphH h = SimpleGraphH::checked(triple, 0);
    CHECK(automorphism_count(triple) == 6);
    const AElement expected = scale(from_yz_poly({{{1, 0}, Rat(1)}}) * pow(AElement::monomial(-1, Rat(1)), 3),
                                    make_rat(1, 6));
    CHECK(f_h_closed_form(h) == expected);
}

TEST_CASE("star-only graphs drop the Y factor") {
    const MultiGraph loops({star_vertex()}, {{0, 0}, {0, 0}});
    const SimpleGraphH h = SimpleGraphH::checked(loops, 0);
    // (1+Z)^2 / |Aut| with |Aut| = 2^2 2! = 8.
    CHECK(f_h_closed_form(h) == AElement::monomial(-2, make_rat(1, 8)));
}

TEST_CASE("extensions carry the forced edge count") {
    // chi is preserved by the reductions, so an extension with n numbered
    // vertices has (n+1) - chi(h) edges; for the genus-2 catalog chi = -1.
    const SimpleGraphH h4 = catalog_h4();
    const int n = 3;
    std::vector<Vertex> verts;
    verts.push_back(star_vertex());
    for (int i = 1; i <= n; ++i) verts.push_back(numbered_vertex(i));
    int checked = 0;
    // Spot check: every decorated graph with the right star valency that
    // simplifies to H4 has n + 2 edges.
    const std::vector<std::vector<std::pair<int, int>>> candidates = {
        {{0, 1}, {1, 1}, {1, 2}, {2, 3}, {3, 1}},        // 5 = n + 2 edges
        {{0, 1}, {1, 2}, {1, 2}, {1, 3}, {2, 3}},        // another shape
        {{0, 1}, {1, 1}, {1, 1}, {2, 3}, {2, 3}, {2, 3}} // disconnected theta component
    };
    for (const auto& edges : candidates) {
        const MultiGraph g(std::vector<Vertex>(verts), edges);
        const auto reduced = try_simplify(g, 0);
        if (reduced && isomorphic_fixing_labels(*reduced, h4.graph)) {
            CHECK(g.edge_count() == n + 2);
            ++checked;
        }
    }
    CHECK(checked >= 1);
}

TEST_CASE("graph JSON round trip and the shipped catalog") {
    for (const auto& [name, graph] : genus2_catalog()) {
        const MultiGraph back = graph_from_json(graph_to_json(graph.graph));
        CHECK(isomorphic_fixing_labels(back, graph.graph));
    }

    const auto catalog = genus2_catalog();
    const auto round = catalog_from_json(catalog_to_json(catalog));
    REQUIRE(round.size() == catalog.size());
    for (size_t i = 0; i < catalog.size(); ++i) {
        CHECK(round[i].name == catalog[i].name);
        CHECK(isomorphic_fixing_labels(round[i].graph.graph, catalog[i].graph.graph));
    }
}

TEST_CASE("constructed simple graphs meet their prescription") {
    const SimpleGraphH g = construct_simple_graph({3, 3, 4, 5}, 3);
    CHECK(g.star_valency() == 3);
    std::vector<int> valencies;
    for (int v = 0; v < g.graph.vertex_count(); ++v)
        if (g.graph.vertex(v).kind == VertexKind::anon) valencies.push_back(g.graph.valency(v));
    std::sort(valencies.begin(), valencies.end());
    CHECK(valencies == std::vector<int>{3, 3, 4, 5});

    // Connected: the reduction of the graph with all vertices protected via
    // a spanning reachability walk.
    std::vector<char> seen(static_cast<size_t>(g.graph.vertex_count()), 0);
    std::vector<int> stack{g.graph.star()};
    seen[static_cast<size_t>(g.graph.star())] = 1;
    const auto edges = g.graph.edge_pairs();
    while (!stack.empty()) {
        const int at = stack.back();
        stack.pop_back();
        for (auto [a, b] : edges) {
            const int other = a == at ? b : (b == at ? a : -1);
            if (other >= 0 && !seen[static_cast<size_t>(other)]) {
                seen[static_cast<size_t>(other)] = 1;
                stack.push_back(other);
            }
        }
    }
    for (char flag : seen) CHECK(flag == 1);
}
