#include "hurwitz_atlas/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hurwitz_atlas/monomials.hpp"

namespace hurwitz_atlas {

MultiGraph::MultiGraph(std::vector<Vertex> vertices, const std::vector<std::pair<int, int>>& edge_pairs)
    : vertices_(std::move(vertices)) {
    half_vertex_.reserve(edge_pairs.size() * 2);
    pairing_.reserve(edge_pairs.size() * 2);
    for (auto [a, b] : edge_pairs) {
        if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
            throw atlas_error("bad_input", "edge endpoint out of range");
        const int h1 = static_cast<int>(half_vertex_.size());
        half_vertex_.push_back(a);
        half_vertex_.push_back(b);
        pairing_.push_back(h1 + 1);
        pairing_.push_back(h1);
    }
}

std::vector<std::pair<int, int>> MultiGraph::edge_pairs() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(edge_count()));
    for (int h = 0; h < half_edge_count(); ++h) {
        const int other = partner(h);
        if (h < other) edges.emplace_back(std::min(half_vertex(h), half_vertex(other)),
                                          std::max(half_vertex(h), half_vertex(other)));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

int MultiGraph::valency(int id) const {
    int count = 0;
    for (int v : half_vertex_)
        if (v == id) ++count;
    return count;
}

int MultiGraph::star() const {
    int found = -1;
    for (int id = 0; id < vertex_count(); ++id) {
        if (vertices_[static_cast<size_t>(id)].kind != VertexKind::star) continue;
        if (found >= 0) throw atlas_error("bad_input", "graph with more than one star vertex");
        found = id;
    }
    if (found < 0) throw atlas_error("bad_input", "graph without a star vertex");
    return found;
}

Vertex star_vertex() { return Vertex{VertexKind::star, 0}; }
Vertex numbered_vertex(int number) { return Vertex{VertexKind::numbered, number}; }
Vertex anon_vertex() { return Vertex{VertexKind::anon, 0}; }

namespace {

struct Reducer {
    std::vector<Vertex> verts;
    std::vector<char> vertex_alive;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> edge_alive;
    std::vector<int> val;
    int star_id;
    int p;

    explicit Reducer(const MultiGraph& g, int p_in) : p(p_in) {
        verts = g.vertices();
        vertex_alive.assign(verts.size(), 1);
        edges = g.edge_pairs();
        edge_alive.assign(edges.size(), 1);
        val.assign(verts.size(), 0);
        for (auto [a, b] : edges) {
            ++val[static_cast<size_t>(a)];
            ++val[static_cast<size_t>(b)];
        }
        star_id = g.star();
    }

    bool erasable_kind(int v) const {
        const Vertex& vx = verts[static_cast<size_t>(v)];
        if (vx.kind == VertexKind::star) return false;
        if (vx.kind == VertexKind::numbered && vx.number <= p) return false;
        return true;
    }

    // Incident alive edge indices (a loop appears once).
    std::vector<int> incident(int v) const {
        std::vector<int> out;
        for (size_t e = 0; e < edges.size(); ++e) {
            if (!edge_alive[e]) continue;
            if (edges[e].first == v || edges[e].second == v) out.push_back(static_cast<int>(e));
        }
        return out;
    }

    bool applicable(int v) const {
        if (!vertex_alive[static_cast<size_t>(v)] || !erasable_kind(v)) return false;
        const int d = val[static_cast<size_t>(v)];
        if (d == 1) {
            for (size_t e = 0; e < edges.size(); ++e) {
                if (!edge_alive[e]) continue;
                if (edges[e].first == v) return edges[e].second != star_id;
                if (edges[e].second == v) return edges[e].first != star_id;
            }
            return false;
        }
        if (d == 2) {
            const auto inc = incident(v);
            // A single incident edge of valency 2 is a loop; it cannot merge.
            return inc.size() == 2;
        }
        return false;
    }

    void apply(int v) {
        const auto inc = incident(v);
        if (val[static_cast<size_t>(v)] == 1) {
            const auto [a, b] = edges[static_cast<size_t>(inc[0])];
            const int other = a == v ? b : a;
            edge_alive[static_cast<size_t>(inc[0])] = 0;
            --val[static_cast<size_t>(other)];
            vertex_alive[static_cast<size_t>(v)] = 0;
            val[static_cast<size_t>(v)] = 0;
            return;
        }
        const auto [a1, b1] = edges[static_cast<size_t>(inc[0])];
        const auto [a2, b2] = edges[static_cast<size_t>(inc[1])];
        const int u = a1 == v ? b1 : a1;
        const int w = a2 == v ? b2 : a2;
        edge_alive[static_cast<size_t>(inc[0])] = 0;
        edge_alive[static_cast<size_t>(inc[1])] = 0;
        edges.emplace_back(std::min(u, w), std::max(u, w));
        edge_alive.push_back(1);
        vertex_alive[static_cast<size_t>(v)] = 0;
        val[static_cast<size_t>(v)] = 0;
        // The merged edge keeps the valencies of u and w unchanged.
    }

    std::vector<int> moves() const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(verts.size()); ++v)
            if (applicable(v)) out.push_back(v);
        return out;
    }

    bool finish_ok() const {
        for (size_t v = 0; v < verts.size(); ++v) {
            if (!vertex_alive[v]) continue;
            if (verts[v].kind == VertexKind::star) continue;
            if (verts[v].kind == VertexKind::numbered && verts[v].number <= p) continue;
            if (val[v] < 3) return false;
        }
        return true;
    }

    MultiGraph build() const {
        std::vector<int> order;
        for (size_t v = 0; v < verts.size(); ++v)
            if (vertex_alive[v] && verts[v].kind == VertexKind::star) order.push_back(static_cast<int>(v));
        std::vector<int> numbered;
        for (size_t v = 0; v < verts.size(); ++v)
            if (vertex_alive[v] && verts[v].kind == VertexKind::numbered && verts[v].number <= p)
                numbered.push_back(static_cast<int>(v));
        std::sort(numbered.begin(), numbered.end(), [&](int a, int b) {
            return verts[static_cast<size_t>(a)].number < verts[static_cast<size_t>(b)].number;
        });
        order.insert(order.end(), numbered.begin(), numbered.end());
        for (size_t v = 0; v < verts.size(); ++v) {
            if (!vertex_alive[v]) continue;
            const Vertex& vx = verts[v];
            if (vx.kind == VertexKind::star) continue;
            if (vx.kind == VertexKind::numbered && vx.number <= p) continue;
            order.push_back(static_cast<int>(v));
        }
        std::vector<int> remap(verts.size(), -1);
        std::vector<Vertex> new_verts;
        for (int old_id : order) {
            remap[static_cast<size_t>(old_id)] = static_cast<int>(new_verts.size());
            Vertex vx = verts[static_cast<size_t>(old_id)];
            if (vx.kind == VertexKind::numbered && vx.number > p) vx = anon_vertex();
            new_verts.push_back(vx);
        }
        std::vector<std::pair<int, int>> new_edges;
        for (size_t e = 0; e < edges.size(); ++e) {
            if (!edge_alive[e]) continue;
            const int a = remap[static_cast<size_t>(edges[e].first)];
            const int b = remap[static_cast<size_t>(edges[e].second)];
            new_edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(new_edges.begin(), new_edges.end());
        return MultiGraph(std::move(new_verts), new_edges);
    }
};

std::optional<MultiGraph> run_reduction(const MultiGraph& g, int p, std::mt19937* rng) {
    Reducer red(g, p);
    while (true) {
        const auto moves = red.moves();
        if (moves.empty()) break;
        int pick = moves.front();
        if (rng != nullptr) {
            std::uniform_int_distribution<size_t> dist(0, moves.size() - 1);
            pick = moves[dist(*rng)];
        }
        red.apply(pick);
    }
    if (!red.finish_ok()) return std::nullopt;
    return red.build();
}

}  // namespace

MultiGraph simplify(const MultiGraph& g, int p) {
    auto result = run_reduction(g, p, nullptr);
    if (!result) throw atlas_error("unsimplifiable", "unsimplifiable component");
    return *result;
}

MultiGraph simplify_with_order(const MultiGraph& g, int p, std::mt19937& rng) {
    auto result = run_reduction(g, p, &rng);
    if (!result) throw atlas_error("unsimplifiable", "unsimplifiable component");
    return *result;
}

std::optional<MultiGraph> try_simplify(const MultiGraph& g, int p) { return run_reduction(g, p, nullptr); }

namespace {

std::vector<std::vector<int>> adjacency_counts(const MultiGraph& g) {
    const size_t n = static_cast<size_t>(g.vertex_count());
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (auto [a, b] : g.edge_pairs()) ++m[static_cast<size_t>(a)][static_cast<size_t>(b)];
    return m;  // loops on the diagonal, other edges at (min, max)
}

int count_at(const std::vector<std::vector<int>>& m, int a, int b) {
    return m[static_cast<size_t>(std::min(a, b))][static_cast<size_t>(std::max(a, b))];
}

}  // namespace

Int automorphism_count(const MultiGraph& g) {
    const auto m = adjacency_counts(g);
    const int n = g.vertex_count();

    // Per-edge-class factor: parallel edges permute, loops permute and flip.
    Int factor(1);
    for (int a = 0; a < n; ++a) {
        const int loops = m[static_cast<size_t>(a)][static_cast<size_t>(a)];
        factor *= factorial(static_cast<unsigned long>(loops));
        factor <<= loops;
        for (int b = a + 1; b < n; ++b) factor *= factorial(static_cast<unsigned long>(m[static_cast<size_t>(a)][static_cast<size_t>(b)]));
    }

    // Vertex permutations: anonymous, non-isolated vertices may move as long
    // as the adjacency multiplicities are preserved. Isolated vertices carry
    // no half-edges, so they contribute nothing.
    std::vector<int> movable;
    for (int v = 0; v < n; ++v)
        if (g.vertex(v).kind == VertexKind::anon && g.valency(v) > 0) movable.push_back(v);

    std::vector<int> target = movable;
    Int vertex_perms(0);
    std::sort(target.begin(), target.end());
    do {
        std::vector<int> pi(static_cast<size_t>(n));
        std::iota(pi.begin(), pi.end(), 0);
        for (size_t i = 0; i < movable.size(); ++i) pi[static_cast<size_t>(movable[i])] = target[i];
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = a; b < n; ++b)
                if (m[static_cast<size_t>(a)][static_cast<size_t>(b)] !=
                    count_at(m, pi[static_cast<size_t>(a)], pi[static_cast<size_t>(b)])) {
                    ok = false;
                    break;
                }
        if (ok) ++vertex_perms;
    } while (std::next_permutation(target.begin(), target.end()));

    return vertex_perms * factor;
}

Int automorphism_count_half_edge_search(const MultiGraph& g) {
    const int h_count = g.half_edge_count();
    require_guard(h_count <= 8, "half-edge search supports at most 8 half-edges");
    std::vector<int> sigma(static_cast<size_t>(h_count));
    std::iota(sigma.begin(), sigma.end(), 0);
    Int count(0);
    do {
        bool ok = true;
        for (int h = 0; h < h_count && ok; ++h)
            if (sigma[static_cast<size_t>(g.partner(h))] != g.partner(sigma[static_cast<size_t>(h)])) ok = false;
        if (!ok) continue;
        std::vector<int> vmap(static_cast<size_t>(g.vertex_count()), -1);
        for (int h = 0; h < h_count && ok; ++h) {
            const int from = g.half_vertex(h);
            const int to = g.half_vertex(sigma[static_cast<size_t>(h)]);
            if (vmap[static_cast<size_t>(from)] < 0)
                vmap[static_cast<size_t>(from)] = to;
            else if (vmap[static_cast<size_t>(from)] != to)
                ok = false;
        }
        if (!ok) continue;
        for (int v = 0; v < g.vertex_count() && ok; ++v) {
            if (vmap[static_cast<size_t>(v)] < 0) continue;
            if (g.vertex(v).kind != VertexKind::anon && vmap[static_cast<size_t>(v)] != v) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return count;
}

std::string canonical_key(const MultiGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> anon_ids;
    std::vector<int> base_token(static_cast<size_t>(n), -1);
    std::vector<int> numbers;
    for (int v = 0; v < n; ++v) {
        switch (g.vertex(v).kind) {
            case VertexKind::star: base_token[static_cast<size_t>(v)] = 0; break;
            case VertexKind::numbered:
                base_token[static_cast<size_t>(v)] = g.vertex(v).number;
                numbers.push_back(g.vertex(v).number);
                break;
            case VertexKind::anon: anon_ids.push_back(v); break;
        }
    }
    std::sort(numbers.begin(), numbers.end());

    const auto edges = g.edge_pairs();
    std::vector<int> perm(anon_ids.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<long> best;
    do {
        auto token = base_token;
        for (size_t i = 0; i < anon_ids.size(); ++i)
            token[static_cast<size_t>(anon_ids[i])] = 1000 + perm[i];
        std::vector<long> encoded;
        encoded.reserve(edges.size());
        for (auto [a, b] : edges) {
            const long ta = token[static_cast<size_t>(a)];
            const long tb = token[static_cast<size_t>(b)];
            encoded.push_back(std::min(ta, tb) * 4096 + std::max(ta, tb));
        }
        std::sort(encoded.begin(), encoded.end());
        if (best.empty() || encoded < best) best = std::move(encoded);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::string key = "v" + std::to_string(n) + "a" + std::to_string(anon_ids.size()) + "m";
    for (int num : numbers) key += std::to_string(num) + ",";
    key += "|";
    for (long code : best) key += std::to_string(code) + ",";
    return key;
}

bool isomorphic_fixing_labels(const MultiGraph& a, const MultiGraph& b) {
    return canonical_key(a) == canonical_key(b);
}

SimpleGraphH SimpleGraphH::checked(MultiGraph g, int p) {
    (void)g.star();  // exactly one star
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Vertex& vx = g.vertex(v);
        if (vx.kind == VertexKind::anon && g.valency(v) < 3)
            throw atlas_error("bad_input", "simple graph with an anonymous vertex of valency < 3");
        if (vx.kind == VertexKind::numbered && (vx.number < 1 || vx.number > p))
            throw atlas_error("bad_input", "simple graph with a vertex number outside 1..p");
    }
    return SimpleGraphH{std::move(g), p};
}

Rat h_bracket(const SimpleGraphH& h, const std::vector<int>& valencies, int p) {
    const int n = static_cast<int>(valencies.size());
    require_guard(n <= 6, "extension enumeration supports n <= 6");
    if (p != h.p) throw atlas_error("bad_input", "extension p does not match the simple graph");
    for (int d : valencies)
        if (d < 1) return Rat(0);

    const int star_val = h.star_valency();
    long degree_sum = star_val;
    for (int d : valencies) degree_sum += d;
    if (degree_sum % 2 != 0) return Rat(0);
    const int edge_total = static_cast<int>(degree_sum / 2);
    if ((n + 1) - edge_total != h.euler_characteristic()) return Rat(0);

    std::vector<Vertex> verts;
    verts.push_back(star_vertex());
    for (int i = 1; i <= n; ++i) verts.push_back(numbered_vertex(i));

    const std::string h_key = canonical_key(h.graph);

    // Enumerate edge multisets meeting the degree sequence: run through the
    // vertex pairs in lexicographic order choosing multiplicities, closing
    // each vertex once its pair list is exhausted.
    std::vector<std::pair<int, int>> pair_list;
    for (int a = 0; a <= n; ++a)
        for (int b = a; b <= n; ++b) pair_list.emplace_back(a, b);

    std::vector<int> rem(static_cast<size_t>(n) + 1);
    rem[0] = star_val;
    for (int i = 1; i <= n; ++i) rem[static_cast<size_t>(i)] = valencies[static_cast<size_t>(i - 1)];

    std::vector<int> mult(pair_list.size(), 0);
    Rat total(0);

    auto emit = [&] {
        std::vector<std::pair<int, int>> edge_list;
        Int sym(1);
        for (size_t idx = 0; idx < pair_list.size(); ++idx) {
            const int m = mult[idx];
            if (m == 0) continue;
            for (int c = 0; c < m; ++c) edge_list.push_back(pair_list[idx]);
            sym *= factorial(static_cast<unsigned long>(m));
            if (pair_list[idx].first == pair_list[idx].second) sym <<= m;
        }
        MultiGraph candidate(verts, edge_list);
        auto reduced = try_simplify(candidate, p);
        if (!reduced) return;
        if (canonical_key(*reduced) != h_key) return;
        total += make_rat(1, sym);
    };

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == pair_list.size()) {
            emit();
            return;
        }
        const auto [a, b] = pair_list[idx];
        const bool closes_a = (b == n);
        const int cap = a == b ? rem[static_cast<size_t>(a)] / 2
                               : std::min(rem[static_cast<size_t>(a)], rem[static_cast<size_t>(b)]);
        for (int m = 0; m <= cap; ++m) {
            if (m > 0) {
                rem[static_cast<size_t>(a)] -= (a == b) ? 2 : 1;
                if (a != b) rem[static_cast<size_t>(b)] -= 1;
                mult[idx] = m;
            }
            if (!closes_a || rem[static_cast<size_t>(a)] == 0) self(self, idx + 1);
        }
        rem[static_cast<size_t>(a)] += (a == b) ? 2 * mult[idx] : mult[idx];
        if (a != b) rem[static_cast<size_t>(b)] += mult[idx];
        mult[idx] = 0;
    };
    rec(rec, 0);
    return total;
}

AElement f_h_closed_form(const SimpleGraphH& h) {
    if (h.p != 0) throw atlas_error("bad_input", "closed form requires a graph without protected vertices");
    const int v = h.non_star_vertex_count();
    const int e = h.edge_count();
    const Int aut = automorphism_count(h.graph);
    AElement result = pow(AElement::y(), v);
    result = result * AElement::monomial(-e, Rat(1));
    return scale(result, make_rat(1, aut));
}

PowerSeries f_h_series_by_enumeration(const SimpleGraphH& h, int order) {
    if (h.p != 0) throw atlas_error("bad_input", "extension series requires p = 0");
    PowerSeries result(order);
    const int chi = h.euler_characteristic();
    const int star_val = h.star_valency();
    for (int n = 0; n <= order; ++n) {
        // Extensions preserve the Euler characteristic and the star valency,
        // which pins the number of edges and the total valency.
        const int edge_total = (n + 1) - chi;
        const int d_sum = 2 * edge_total - star_val - n;
        if (edge_total < 0 || d_sum < 0) continue;
        Rat acc(0);
        for_each_monomial(n, d_sum, [&](const Monomial& m) {
            std::vector<int> valencies(m.size());
            for (size_t i = 0; i < m.size(); ++i) valencies[i] = m[i] + 1;
            const Rat value = h_bracket(h, valencies, 0);
            if (value != 0) acc += Rat(monomial_multiplicity(m)) * value;
        });
        result.set(n, acc / Rat(factorial(static_cast<unsigned long>(n))));
    }
    return result;
}

SimpleGraphH construct_simple_graph(const std::vector<int>& anon_valencies, int star_valency) {
    const int m = static_cast<int>(anon_valencies.size());
    if (star_valency < 1 && m > 0) throw atlas_error("degree_range", "star valency must be positive");
    long total = star_valency;
    for (int d : anon_valencies) {
        if (d < 3) throw atlas_error("bad_input", "anonymous valencies must be >= 3");
        total += d;
    }
    if (total % 2 != 0) throw atlas_error("bad_input", "odd total valency");

    std::vector<Vertex> verts;
    verts.push_back(star_vertex());
    for (int i = 0; i < m; ++i) verts.push_back(anon_vertex());

    std::vector<int> rem(static_cast<size_t>(m) + 1);
    rem[0] = star_valency;
    for (int i = 0; i < m; ++i) rem[static_cast<size_t>(i) + 1] = anon_valencies[static_cast<size_t>(i)];

    std::vector<std::pair<int, int>> edges;
    // Spanning chain for connectivity, then pair the leftover stubs.
    for (int i = 0; i + 1 <= m; ++i) {
        edges.emplace_back(i, i + 1);
        --rem[static_cast<size_t>(i)];
        --rem[static_cast<size_t>(i) + 1];
    }
    while (true) {
        int first = -1, second = -1;
        for (int v = 0; v <= m; ++v) {
            if (rem[static_cast<size_t>(v)] <= 0) continue;
            if (first < 0 || rem[static_cast<size_t>(v)] > rem[static_cast<size_t>(first)]) {
                second = first;
                first = v;
            } else if (second < 0 || rem[static_cast<size_t>(v)] > rem[static_cast<size_t>(second)]) {
                second = v;
            }
        }
        if (first < 0) break;
        if (second < 0) {
            if (rem[static_cast<size_t>(first)] < 2) throw atlas_error("internal", "stub pairing failed");
            edges.emplace_back(first, first);
            rem[static_cast<size_t>(first)] -= 2;
            continue;
        }
        edges.emplace_back(std::min(first, second), std::max(first, second));
        --rem[static_cast<size_t>(first)];
        --rem[static_cast<size_t>(second)];
    }
    return SimpleGraphH::checked(MultiGraph(std::move(verts), edges), 0);
}

SimpleGraphH catalog_h4() {
    return SimpleGraphH::checked(
        MultiGraph({star_vertex(), anon_vertex()}, {{0, 1}, {1, 1}, {1, 1}}), 0);
}

SimpleGraphH catalog_h23() {
    return SimpleGraphH::checked(
        MultiGraph({star_vertex(), anon_vertex(), anon_vertex()}, {{0, 1}, {1, 2}, {1, 2}, {2, 2}}), 0);
}

SimpleGraphH catalog_h222() {
    return SimpleGraphH::checked(
        MultiGraph({star_vertex(), anon_vertex(), anon_vertex(), anon_vertex()},
                   {{0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 3}}),
        0);
}

std::vector<NamedGraph> genus2_catalog() {
    return {{"H4", catalog_h4()}, {"H23", catalog_h23()}, {"H222", catalog_h222()}};
}

}  // namespace hurwitz_atlas
