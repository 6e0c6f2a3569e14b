#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hurwitz_atlas/algebra_a.hpp"
#include "hurwitz_atlas/rational.hpp"

namespace hurwitz_atlas {

enum class VertexKind { star, numbered, anon };

struct Vertex {
    VertexKind kind = VertexKind::anon;
    int number = 0;  // meaningful for numbered vertices

    bool operator==(const Vertex& other) const = default;
};

// Multigraph with one star vertex, numbered vertices and anonymous vertices.
// Stored as a half-edge structure: each half-edge sits at a vertex and the
// pairing is a fixed-point-free involution; loops are edges whose halves
// share a vertex.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(std::vector<Vertex> vertices, const std::vector<std::pair<int, int>>& edge_pairs);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const Vertex& vertex(int id) const { return vertices_[static_cast<size_t>(id)]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    int half_edge_count() const { return static_cast<int>(half_vertex_.size()); }
    int half_vertex(int h) const { return half_vertex_[static_cast<size_t>(h)]; }
    int partner(int h) const { return pairing_[static_cast<size_t>(h)]; }

    int edge_count() const { return half_edge_count() / 2; }
    // Edges as normalized (min id, max id) pairs, sorted.
    std::vector<std::pair<int, int>> edge_pairs() const;

    int valency(int id) const;
    int star() const;  // id of the unique star vertex; error if absent/ambiguous
    int euler_characteristic() const { return vertex_count() - edge_count(); }

private:
    std::vector<Vertex> vertices_;
    std::vector<int> half_vertex_;
    std::vector<int> pairing_;
};

// Vertex list helpers for the common shapes.
Vertex star_vertex();
Vertex numbered_vertex(int number);
Vertex anon_vertex();

// Applies the two reductions exhaustively: erase a vertex of valency 1
// together with its edge, or erase a vertex of valency 2 merging its two
// edges. The star is never erased and its valency never changes; vertices
// numbered 1..p are never erased. Afterwards the numbers above p are
// forgotten. Throws atlas_error("unsimplifiable", ...) when a leftover
// non-protected vertex of valency <= 2 cannot be removed.
MultiGraph simplify(const MultiGraph& g, int p);

// As simplify, but applies the reductions in a random order (used to check
// that the result does not depend on the order).
MultiGraph simplify_with_order(const MultiGraph& g, int p, std::mt19937& rng);

std::optional<MultiGraph> try_simplify(const MultiGraph& g, int p);

// Order of the group of half-edge permutations that fix the star and the
// numbered vertices (anonymous vertices may move), preserve half-edge
// attachment up to the induced vertex map, and map edges to edges.
Int automorphism_count(const MultiGraph& g);

// Literal search over all half-edge permutations; for graphs with at most
// 8 half-edges. Test oracle for automorphism_count.
Int automorphism_count_half_edge_search(const MultiGraph& g);

// Canonical certificate: the smallest edge-multiset encoding over all
// relabelings of the anonymous vertices. Two graphs are isomorphic (fixing
// star and numbers) iff their keys agree.
std::string canonical_key(const MultiGraph& g);

bool isomorphic_fixing_labels(const MultiGraph& a, const MultiGraph& b);

// A graph whose non-protected vertices all have valency >= 3: the possible
// simplification results.
struct SimpleGraphH {
    MultiGraph graph;
    int p = 0;  // number of protected numbered vertices

    static SimpleGraphH checked(MultiGraph g, int p = 0);

    int non_star_vertex_count() const { return graph.vertex_count() - 1; }
    int edge_count() const { return graph.edge_count(); }
    int star_valency() const { return graph.valency(graph.star()); }
    int euler_characteristic() const { return graph.euler_characteristic(); }
};

// The bracket value <tau_{d_1} ... tau_{d_n}>_H: the weighted number of
// decorated graphs on the star plus vertices 1..n, with valency(i) =
// valencies[i-1], whose p-simplification is h. Each graph counts with
// weight 1 / (number of its symmetries). Guard: n <= 6.
Rat h_bracket(const SimpleGraphH& h, const std::vector<int>& valencies, int p = 0);

// Y^v (1+Z)^e / |Aut(H)| with v the number of non-star vertices and e the
// number of edges; h must have no protected numbered vertices.
AElement f_h_closed_form(const SimpleGraphH& h);

// The series sum_n q^n/n! sum_d <tau_{d_1}...tau_{d_n}>_H assembled from
// extension enumeration (slow; for cross-checking f_h_closed_form).
PowerSeries f_h_series_by_enumeration(const SimpleGraphH& h, int order);

// Connected graph with the prescribed anonymous valencies (each >= 3) and
// star valency >= 1; used when no catalog graph matches.
SimpleGraphH construct_simple_graph(const std::vector<int>& anon_valencies, int star_valency);

struct NamedGraph {
    std::string name;
    SimpleGraphH graph;
};

// The three reference graphs used for the genus 2 bracket: one vertex of
// valency 5 (two loops plus the star edge), valencies 3,4 (star edge,
// double edge, loop), and valencies 3,3,3 (star edge, double edge, bridge,
// loop). Their symmetry counts are 8, 4 and 4.
SimpleGraphH catalog_h4();
SimpleGraphH catalog_h23();
SimpleGraphH catalog_h222();
std::vector<NamedGraph> genus2_catalog();

}  // namespace hurwitz_atlas
