#pragma once

#include <functional>
#include <vector>

#include "hurwitz_atlas/rational.hpp"

namespace hurwitz_atlas {

// A tree on vertices 1..n, stored as its n-1 edges.
struct LabeledTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Streams every labeled tree on n vertices exactly once, by decoding all
// Pruefer sequences. There are n^{n-2} of them. Guard: 1 <= n <= 9.
void for_each_tree(int n, const std::function<void(const LabeledTree&)>& visit);

Int count_trees(int n);

enum class MomentKind { m, p };

// Sums over all trees and all ordered pairs of distinct marked vertices:
// kind m gives sum l^k, kind p gives sum binom(l, k), with l the distance
// between the marks. Guard: n <= 8.
Rat path_moments(int n, int k, MomentKind kind);

}  // namespace hurwitz_atlas
