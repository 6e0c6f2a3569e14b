#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hurwitz_atlas/rational.hpp"

namespace hurwitz_atlas {

// Integer partition, parts descending. Carries both views used for
// ramification data: additive (the parts b_i) and multiplicative (the
// multiplicities a_i of each part value).
struct Partition {
    std::vector<int> parts;

    static Partition from_parts(std::vector<int> parts);

    // "3,2,2" (comma list), "1^2 3" (multiplicative), or "" for the empty
    // partition.
    static Partition parse(const std::string& text);

    std::string to_string() const;

    bool empty() const { return parts.empty(); }
    int sum() const;          // m
    int count() const { return static_cast<int>(parts.size()); }  // p
    int degeneracy() const { return sum() - count(); }            // r
    int count_ones() const;
    int sum_of_large_parts() const;  // total of the parts >= 2
    Int aut() const;                 // prod of multiplicity factorials

    auto operator<=>(const Partition& other) const = default;
};

// The parts >= 2 of mu padded with fixed points up to n: the conjugacy
// class of a branch point of type mu on an n-sheeted covering.
Partition completed_class(const Partition& mu, int n);

// All partitions of n in a fixed order, with index lookup, class sizes and
// canonical representative permutations.
class PartitionTable {
public:
    explicit PartitionTable(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(all_.size()); }
    const Partition& at(int idx) const { return all_[static_cast<size_t>(idx)]; }
    int index_of(const Partition& p) const;
    int identity_index() const { return identity_idx_; }
    const Int& class_size(int idx) const { return class_sizes_[static_cast<size_t>(idx)]; }

    // Cycle type of a permutation given as an image array over 0..n-1.
    int type_index(const std::vector<int>& perm) const;

    // Canonical permutation of the given cycle type: cycles laid out over
    // consecutive points.
    std::vector<int> representative(int idx) const;

private:
    int n_;
    std::vector<Partition> all_;
    std::map<std::vector<int>, int> index_;
    std::vector<Int> class_sizes_;
    int identity_idx_ = -1;
};

// Visits every permutation of cycle type `p` (image arrays over 0..n-1).
void for_each_in_class(int n, const Partition& p, const std::function<void(const std::vector<int>&)>& visit);

Int class_size(int n, const Partition& p);

}  // namespace hurwitz_atlas
