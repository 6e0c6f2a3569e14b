#include "hurwitz_atlas/class_algebra.hpp"

#include <algorithm>

namespace hurwitz_atlas {

ClassVector delta_identity(int n) {
    ClassVector v;
    v.n = n;
    v.entries[completed_class(Partition{}, n)] = Rat(1);
    return v;
}

CutJoinMoves cut_join_moves(const PartitionTable& table) {
    require_guard(table.n() <= 30, "cut-and-join table supports n <= 30");
    CutJoinMoves moves;
    moves.per_class.resize(static_cast<size_t>(table.size()));
    for (int idx = 0; idx < table.size(); ++idx) {
        const Partition& p = table.at(idx);
        std::map<int, unsigned long> acc;

        // Distinct part values with multiplicities.
        std::vector<std::pair<int, int>> runs;
        for (int b : p.parts) {
            if (!runs.empty() && runs.back().first == b)
                ++runs.back().second;
            else
                runs.emplace_back(b, 1);
        }

        auto rebuilt = [&](int remove_a, int remove_b, int add_a, int add_b) {
            std::vector<int> parts = p.parts;
            auto erase_one = [&parts](int value) {
                auto it = std::find(parts.begin(), parts.end(), value);
                parts.erase(it);
            };
            if (remove_a > 0) erase_one(remove_a);
            if (remove_b > 0) erase_one(remove_b);
            if (add_a > 0) parts.push_back(add_a);
            if (add_b > 0) parts.push_back(add_b);
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            return table.index_of(Partition{std::move(parts)});
        };

        // Cuts: a transposition inside one c-cycle splits it into j, c-j.
        for (const auto& [c, mult] : runs) {
            for (int j = 1; j * 2 <= c; ++j) {
                const int other = c - j;
                if (other < j) break;
                const unsigned long ways =
                    static_cast<unsigned long>(mult) * static_cast<unsigned long>(j == other ? c / 2 : c);
                acc[rebuilt(c, 0, j, other)] += ways;
            }
        }
        // Joins: a transposition across two cycles of lengths c1, c2 merges them.
        for (size_t i = 0; i < runs.size(); ++i) {
            const auto [c1, m1] = runs[i];
            if (m1 >= 2) {
                const unsigned long ways = static_cast<unsigned long>(m1) *
                                           static_cast<unsigned long>(m1 - 1) / 2 *
                                           static_cast<unsigned long>(c1) * static_cast<unsigned long>(c1);
                acc[rebuilt(c1, c1, 2 * c1, 0)] += ways;
            }
            for (size_t j = i + 1; j < runs.size(); ++j) {
                const auto [c2, m2] = runs[j];
                const unsigned long ways = static_cast<unsigned long>(m1) * static_cast<unsigned long>(m2) *
                                           static_cast<unsigned long>(c1) * static_cast<unsigned long>(c2);
                acc[rebuilt(c1, c2, c1 + c2, 0)] += ways;
            }
        }
        moves.per_class[static_cast<size_t>(idx)].assign(acc.begin(), acc.end());
    }
    return moves;
}

std::vector<Int> pull_step(const CutJoinMoves& moves, const std::vector<Int>& f) {
    std::vector<Int> out(f.size(), Int(0));
    for (size_t src = 0; src < f.size(); ++src)
        for (const auto& [target, count] : moves.per_class[src])
            out[src] += count * f[static_cast<size_t>(target)];
    return out;
}

std::vector<Int> convolve_class(const PartitionTable& table, const std::vector<Int>& f,
                                const Partition& lambda) {
    const int n = table.n();
    require_guard(class_size(n, lambda) <= Int(1000000), "class convolution supports |class| <= 10^6");

    // Collect the inverses of the class members once.
    std::vector<std::vector<int>> inverses;
    for_each_in_class(n, lambda, [&](const std::vector<int>& y) {
        std::vector<int> inv(y.size());
        for (size_t i = 0; i < y.size(); ++i) inv[static_cast<size_t>(y[i])] = static_cast<int>(i);
        inverses.push_back(std::move(inv));
    });

    std::vector<Int> out(f.size(), Int(0));
    std::vector<int> product(static_cast<size_t>(n));
    for (int idx = 0; idx < table.size(); ++idx) {
        const std::vector<int> rep = table.representative(idx);
        Int acc(0);
        for (const auto& inv : inverses) {
            for (size_t i = 0; i < product.size(); ++i)
                product[i] = rep[static_cast<size_t>(inv[i])];  // (x . y^{-1})(i) = x(y^{-1}(i))
            acc += f[static_cast<size_t>(table.type_index(product))];
        }
        out[static_cast<size_t>(idx)] = std::move(acc);
    }
    return out;
}

namespace {

std::vector<Rat> to_per_element(const PartitionTable& table, const ClassVector& v) {
    std::vector<Rat> f(static_cast<size_t>(table.size()), Rat(0));
    for (const auto& [p, total] : v.entries) {
        const int idx = table.index_of(p);
        f[static_cast<size_t>(idx)] = total / Rat(table.class_size(idx));
    }
    return f;
}

ClassVector from_per_element(const PartitionTable& table, const std::vector<Rat>& f, int n) {
    ClassVector v;
    v.n = n;
    for (int idx = 0; idx < table.size(); ++idx)
        if (f[static_cast<size_t>(idx)] != 0)
            v.entries[table.at(idx)] = f[static_cast<size_t>(idx)] * Rat(table.class_size(idx));
    return v;
}

}  // namespace

ClassVector cut_and_join(const ClassVector& v) {
    const PartitionTable table(v.n);
    const CutJoinMoves moves = cut_join_moves(table);
    // Push the class totals along the moves: total'(target) accumulates
    // total(source) * ways.
    std::vector<Rat> totals(static_cast<size_t>(table.size()), Rat(0));
    for (const auto& [p, total] : v.entries) totals[static_cast<size_t>(table.index_of(p))] = total;
    std::vector<Rat> out(totals.size(), Rat(0));
    for (size_t src = 0; src < totals.size(); ++src) {
        if (totals[src] == 0) continue;
        for (const auto& [target, count] : moves.per_class[src])
            out[static_cast<size_t>(target)] += Rat(count) * totals[src];
    }
    ClassVector result;
    result.n = v.n;
    for (int idx = 0; idx < table.size(); ++idx)
        if (out[static_cast<size_t>(idx)] != 0) result.entries[table.at(idx)] = out[static_cast<size_t>(idx)];
    return result;
}

ClassVector class_multiply(const ClassVector& v, const Partition& lambda) {
    const PartitionTable table(v.n);
    std::vector<Rat> f = to_per_element(table, v);

    std::vector<std::vector<int>> inverses;
    require_guard(class_size(v.n, lambda) <= Int(1000000), "class convolution supports |class| <= 10^6");
    for_each_in_class(v.n, lambda, [&](const std::vector<int>& y) {
        std::vector<int> inv(y.size());
        for (size_t i = 0; i < y.size(); ++i) inv[static_cast<size_t>(y[i])] = static_cast<int>(i);
        inverses.push_back(std::move(inv));
    });

    std::vector<Rat> out(f.size(), Rat(0));
    std::vector<int> product(static_cast<size_t>(v.n));
    for (int idx = 0; idx < table.size(); ++idx) {
        const std::vector<int> rep = table.representative(idx);
        Rat acc(0);
        for (const auto& inv : inverses) {
            for (size_t i = 0; i < product.size(); ++i) product[i] = rep[static_cast<size_t>(inv[i])];
            acc += f[static_cast<size_t>(table.type_index(product))];
        }
        out[static_cast<size_t>(idx)] = std::move(acc);
    }
    return from_per_element(table, out, v.n);
}

}  // namespace hurwitz_atlas
