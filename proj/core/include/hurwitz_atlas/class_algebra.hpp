#pragma once

#include <map>
#include <vector>

#include "hurwitz_atlas/partitions.hpp"
#include "hurwitz_atlas/rational.hpp"

namespace hurwitz_atlas {

// Central element of the group algebra of S_n, stored as the total weight
// carried by each conjugacy class (the per-element coefficient times the
// class size).
struct ClassVector {
    int n = 0;
    std::map<Partition, Rat> entries;
};

ClassVector delta_identity(int n);

// Multiplication by the sum of all transpositions, computed combinatorially:
// a transposition either cuts one cycle in two or joins two cycles.
ClassVector cut_and_join(const ClassVector& v);

// Multiplication by the full conjugacy class of lambda (a partition of n),
// by representative-based convolution. Guard: |class| <= 10^6.
ClassVector class_multiply(const ClassVector& v, const Partition& lambda);

// Transposition moves from each class: for a fixed permutation of the
// source type, how many transpositions lead into each target type.
struct CutJoinMoves {
    std::vector<std::vector<std::pair<int, unsigned long>>> per_class;  // (target index, count)
};

CutJoinMoves cut_join_moves(const PartitionTable& table);

// One step of the per-element integer dynamics: f'(x) = sum_t f(x t) over
// transpositions t, evaluated per conjugacy class.
std::vector<Int> pull_step(const CutJoinMoves& moves, const std::vector<Int>& f);

// Per-element convolution with the class of lambda: f'(x) = sum over y in
// the class of f(x y^{-1}).
std::vector<Int> convolve_class(const PartitionTable& table, const std::vector<Int>& f,
                                const Partition& lambda);

}  // namespace hurwitz_atlas
