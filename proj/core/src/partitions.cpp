#include "hurwitz_atlas/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hurwitz_atlas {

Partition Partition::from_parts(std::vector<int> parts) {
    for (int b : parts)
        if (b < 1) throw atlas_error("bad_input", "partition parts must be >= 1");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition{std::move(parts)};
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    auto parse_positive = [](const std::string& s) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        } catch (const std::exception&) {
            throw atlas_error("bad_input", "bad partition entry: '" + s + "'");
        }
        if (pos != s.size() || v < 1) throw atlas_error("bad_input", "bad partition entry: '" + s + "'");
        return v;
    };
    if (text.find_first_not_of(" \t") == std::string::npos) return Partition{};
    if (text.find('^') != std::string::npos || text.find(' ') != std::string::npos) {
        std::stringstream stream(text);
        std::string token;
        while (stream >> token) {
            const auto caret = token.find('^');
            if (caret == std::string::npos) {
                parts.push_back(parse_positive(token));
            } else {
                const int value = parse_positive(token.substr(0, caret));
                const int mult = parse_positive(token.substr(caret + 1));
                for (int i = 0; i < mult; ++i) parts.push_back(value);
            }
        }
    } else {
        std::stringstream stream(text);
        std::string item;
        while (std::getline(stream, item, ',')) {
            if (item.empty()) continue;
            parts.push_back(parse_positive(item));
        }
    }
    return from_parts(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts[i]);
    }
    return out;
}

int Partition::sum() const {
    int s = 0;
    for (int b : parts) s += b;
    return s;
}

int Partition::count_ones() const {
    int c = 0;
    for (int b : parts)
        if (b == 1) ++c;
    return c;
}

int Partition::sum_of_large_parts() const {
    int s = 0;
    for (int b : parts)
        if (b >= 2) s += b;
    return s;
}

Int Partition::aut() const {
    Int result(1);
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        result *= factorial(static_cast<unsigned long>(j - i));
        i = j;
    }
    return result;
}

Partition completed_class(const Partition& mu, int n) {
    std::vector<int> parts;
    int used = 0;
    for (int b : mu.parts)
        if (b >= 2) {
            parts.push_back(b);
            used += b;
        }
    if (used > n) throw atlas_error("bad_input", "partition does not fit into n sheets");
    for (int i = used; i < n; ++i) parts.push_back(1);
    return Partition{std::move(parts)};
}

namespace {

void enumerate_partitions(int remaining, int max_part, std::vector<int>& current,
                          const std::function<void(const std::vector<int>&)>& visit) {
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        enumerate_partitions(remaining - part, part, current, visit);
        current.pop_back();
    }
}

Int z_factor(const Partition& p) {
    Int z(1);
    size_t i = 0;
    while (i < p.parts.size()) {
        size_t j = i;
        while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
        z *= int_pow(Int(p.parts[i]), static_cast<unsigned long>(j - i));
        z *= factorial(static_cast<unsigned long>(j - i));
        i = j;
    }
    return z;
}

}  // namespace

PartitionTable::PartitionTable(int n) : n_(n) {
    if (n < 0) throw atlas_error("bad_input", "partition table needs n >= 0");
    std::vector<int> current;
    enumerate_partitions(n, std::max(n, 1), current,
                         [&](const std::vector<int>& parts) { all_.push_back(Partition{parts}); });
    if (n == 0) all_ = {Partition{}};
    class_sizes_.reserve(all_.size());
    const Int n_fact = factorial(static_cast<unsigned long>(n));
    for (size_t idx = 0; idx < all_.size(); ++idx) {
        index_.emplace(all_[idx].parts, static_cast<int>(idx));
        Int size;
        mpz_divexact(size.get_mpz_t(), n_fact.get_mpz_t(), z_factor(all_[idx]).get_mpz_t());
        class_sizes_.push_back(size);
        if (all_[idx].count() == n) identity_idx_ = static_cast<int>(idx);
    }
}

int PartitionTable::index_of(const Partition& p) const {
    auto it = index_.find(p.parts);
    if (it == index_.end()) throw atlas_error("bad_input", "partition is not a partition of n");
    return it->second;
}

int PartitionTable::type_index(const std::vector<int>& perm) const {
    std::vector<int> parts;
    std::vector<char> seen(perm.size(), 0);
    for (size_t start = 0; start < perm.size(); ++start) {
        if (seen[start]) continue;
        int length = 0;
        size_t at = start;
        while (!seen[at]) {
            seen[at] = 1;
            at = static_cast<size_t>(perm[at]);
            ++length;
        }
        parts.push_back(length);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    auto it = index_.find(parts);
    if (it == index_.end()) throw atlas_error("internal", "cycle type missing from table");
    return it->second;
}

std::vector<int> PartitionTable::representative(int idx) const {
    const Partition& p = all_[static_cast<size_t>(idx)];
    std::vector<int> perm(static_cast<size_t>(n_));
    int base = 0;
    for (int part : p.parts) {
        for (int i = 0; i < part; ++i) perm[static_cast<size_t>(base + i)] = base + (i + 1) % part;
        base += part;
    }
    return perm;
}

void for_each_in_class(int n, const Partition& p, const std::function<void(const std::vector<int>&)>& visit) {
    if (p.sum() != n) throw atlas_error("bad_input", "class enumeration needs a partition of n");

    // Process points in increasing order. Each time, the smallest undecided
    // point either stays fixed or anchors a cycle of one of the remaining
    // lengths, with the other members drawn from the larger undecided points.
    // Every permutation of the type arises exactly once.
    std::vector<std::pair<int, int>> lengths;  // (cycle length >= 2, remaining multiplicity)
    for (int b : p.parts) {
        if (b < 2) continue;
        if (!lengths.empty() && lengths.back().first == b)
            ++lengths.back().second;
        else
            lengths.emplace_back(b, 1);
    }
    int remaining_fixed = p.count_ones();

    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::vector<char> used(static_cast<size_t>(n), 0);

    std::function<void()> rec = [&] {
        int anchor = 0;
        while (anchor < n && used[static_cast<size_t>(anchor)]) ++anchor;
        if (anchor == n) {
            visit(perm);
            return;
        }
        used[static_cast<size_t>(anchor)] = 1;
        if (remaining_fixed > 0) {
            --remaining_fixed;
            rec();
            ++remaining_fixed;
        }
        std::vector<int> free_points;
        for (int i = anchor + 1; i < n; ++i)
            if (!used[static_cast<size_t>(i)]) free_points.push_back(i);
        for (auto& [len, mult] : lengths) {
            if (mult == 0 || static_cast<int>(free_points.size()) < len - 1) continue;
            --mult;
            std::vector<int> chosen(static_cast<size_t>(len) - 1);
            std::function<void(size_t, size_t)> pick = [&](size_t slot, size_t from) {
                if (slot == chosen.size()) {
                    std::vector<int> arrangement = chosen;  // already sorted: combinations ascend
                    do {
                        int prev = anchor;
                        for (int point : arrangement) {
                            perm[static_cast<size_t>(prev)] = point;
                            used[static_cast<size_t>(point)] = 1;
                            prev = point;
                        }
                        perm[static_cast<size_t>(prev)] = anchor;
                        rec();
                        for (int point : arrangement) {
                            used[static_cast<size_t>(point)] = 0;
                            perm[static_cast<size_t>(point)] = point;
                        }
                        perm[static_cast<size_t>(anchor)] = anchor;
                    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
                    return;
                }
                for (size_t i = from; i < free_points.size(); ++i) {
                    chosen[slot] = free_points[i];
                    pick(slot + 1, i + 1);
                }
            };
            pick(0, 0);
            ++mult;
        }
        used[static_cast<size_t>(anchor)] = 0;
    };
    rec();
}

Int class_size(int n, const Partition& p) {
    if (p.sum() != n) throw atlas_error("bad_input", "class size needs a partition of n");
    Int size;
    mpz_divexact(size.get_mpz_t(), factorial(static_cast<unsigned long>(n)).get_mpz_t(),
                 z_factor(p).get_mpz_t());
    return size;
}

}  // namespace hurwitz_atlas
