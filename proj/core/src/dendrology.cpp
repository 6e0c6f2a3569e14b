#include "hurwitz_atlas/dendrology.hpp"

#include <algorithm>

namespace hurwitz_atlas {

namespace {

LabeledTree decode_pruefer(int n, const std::vector<int>& seq) {
    LabeledTree tree;
    tree.n = n;
    std::vector<int> degree(static_cast<size_t>(n) + 1, 1);
    for (int v : seq) ++degree[static_cast<size_t>(v)];
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    int leaf_scan = 1;
    int leaf = -1;
    auto next_leaf = [&] {
        while (degree[static_cast<size_t>(leaf_scan)] != 1 || used[static_cast<size_t>(leaf_scan)]) ++leaf_scan;
        return leaf_scan;
    };
    leaf = next_leaf();
    for (int v : seq) {
        tree.edges.emplace_back(leaf, v);
        used[static_cast<size_t>(leaf)] = true;
        if (--degree[static_cast<size_t>(v)] == 1 && v < leaf_scan && !used[static_cast<size_t>(v)]) {
            leaf = v;  // v became a leaf smaller than the scan front
        } else {
            leaf = next_leaf();
        }
    }
    // The last edge joins the two remaining unused vertices; one of them is n.
    tree.edges.emplace_back(leaf, n);
    return tree;
}

}  // namespace

void for_each_tree(int n, const std::function<void(const LabeledTree&)>& visit) {
    require_guard(n >= 1 && n <= 9, "tree enumeration supports 1 <= n <= 9");
    if (n < 1) throw atlas_error("bad_input", "tree enumeration needs n >= 1");
    if (n <= 2) {
        LabeledTree tree;
        tree.n = n;
        if (n == 2) tree.edges.emplace_back(1, 2);
        visit(tree);
        return;
    }
    std::vector<int> seq(static_cast<size_t>(n) - 2, 1);
    while (true) {
        visit(decode_pruefer(n, seq));
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[static_cast<size_t>(pos)] == n) {
            seq[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<size_t>(pos)];
    }
}

Int count_trees(int n) {
    Int count(0);
    for_each_tree(n, [&](const LabeledTree&) { ++count; });
    return count;
}

Rat path_moments(int n, int k, MomentKind kind) {
    require_guard(n <= 8, "path moments support n <= 8");
    if (n < 1 || k < 0) throw atlas_error("bad_input", "path moments need n >= 1 and k >= 0");
    Int total(0);
    std::vector<std::vector<int>> dist(static_cast<size_t>(n) + 1, std::vector<int>(static_cast<size_t>(n) + 1, 0));
    std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
    std::vector<int> queue(static_cast<size_t>(n) + 1, 0);
    for_each_tree(n, [&](const LabeledTree& tree) {
        for (auto& list : adj) list.clear();
        for (auto [a, b] : tree.edges) {
            adj[static_cast<size_t>(a)].push_back(b);
            adj[static_cast<size_t>(b)].push_back(a);
        }
        for (int src = 1; src <= n; ++src) {
            auto& d = dist[static_cast<size_t>(src)];
            std::fill(d.begin(), d.end(), -1);
            d[static_cast<size_t>(src)] = 0;
            int head = 0, tail = 0;
            queue[tail++] = src;
            while (head < tail) {
                const int v = queue[head++];
                for (int w : adj[static_cast<size_t>(v)])
                    if (d[static_cast<size_t>(w)] < 0) {
                        d[static_cast<size_t>(w)] = d[static_cast<size_t>(v)] + 1;
                        queue[tail++] = w;
                    }
            }
        }
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                if (a == b) continue;
                const long l = dist[static_cast<size_t>(a)][static_cast<size_t>(b)];
                if (kind == MomentKind::m) {
                    total += int_pow(Int(l), static_cast<unsigned long>(k));
                } else {
                    total += binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(k));
                }
            }
    });
    return Rat(total);
}

}  // namespace hurwitz_atlas
