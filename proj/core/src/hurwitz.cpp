#include "hurwitz_atlas/hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>

#include "hurwitz_atlas/class_algebra.hpp"

namespace hurwitz_atlas {

int HurwitzQuery::total_degeneracy() const {
    int r = 0;
    for (const auto& mu : mus) r += mu.degeneracy();
    return r;
}

int HurwitzQuery::simple_point_count() const { return 2 * n + 2 * genus - 2 - total_degeneracy(); }

namespace {

using ProfileTuple = std::vector<Partition>;

// Key on the multiset of nonempty profiles; the counts are symmetric in the
// branch points.
std::string tuple_key(const ProfileTuple& t) {
    std::vector<std::string> parts;
    for (const auto& p : t)
        if (!p.empty()) parts.push_back(p.to_string());
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& s : parts) key += s + ";";
    return key;
}

bool tuple_empty(const ProfileTuple& t) {
    for (const auto& p : t)
        if (!p.empty()) return false;
    return true;
}

bool contains(const Partition& big, const Partition& small) {
    size_t i = 0;
    for (int part : small.parts) {
        while (i < big.parts.size() && big.parts[i] > part) ++i;
        if (i == big.parts.size() || big.parts[i] != part) return false;
        ++i;
    }
    return true;
}

Partition subtract(const Partition& big, const Partition& small) {
    std::vector<int> rest = big.parts;
    for (int part : small.parts) rest.erase(std::find(rest.begin(), rest.end(), part));
    return Partition{std::move(rest)};
}

bool tuple_contains(const ProfileTuple& big, const ProfileTuple& small) {
    for (size_t i = 0; i < big.size(); ++i)
        if (!contains(big[i], small[i])) return false;
    return true;
}

ProfileTuple tuple_subtract(const ProfileTuple& big, const ProfileTuple& small) {
    ProfileTuple rest(big.size());
    for (size_t i = 0; i < big.size(); ++i) rest[i] = subtract(big[i], small[i]);
    return rest;
}

std::vector<Partition> submultisets(const Partition& p) {
    std::vector<std::pair<int, int>> runs;
    for (int b : p.parts) {
        if (!runs.empty() && runs.back().first == b)
            ++runs.back().second;
        else
            runs.emplace_back(b, 1);
    }
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(size_t)> rec = [&](size_t run_idx) {
        if (run_idx == runs.size()) {
            out.push_back(Partition::from_parts(current));
            return;
        }
        const auto [value, mult] = runs[run_idx];
        for (int take = 0; take <= mult; ++take) {
            for (int i = 0; i < take; ++i) current.push_back(value);
            rec(run_idx + 1);
            for (int i = 0; i < take; ++i) current.pop_back();
        }
    };
    rec(0);
    return out;
}

// Every positional choice of a sub-multiset per branch point.
std::vector<ProfileTuple> all_subtuples(const ProfileTuple& mus) {
    std::vector<std::vector<Partition>> choices;
    for (const auto& mu : mus) choices.push_back(submultisets(mu));
    std::vector<ProfileTuple> out;
    ProfileTuple current(mus.size());
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == mus.size()) {
            out.push_back(current);
            return;
        }
        for (const auto& choice : choices[i]) {
            current[i] = choice;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// Choices of marked simple preimages: one binomial per branch point.
Rat marking_factor(const ProfileTuple& t, int n) {
    Rat factor(1);
    for (const auto& p : t) {
        const int ones = p.count_ones();
        if (ones == 0) continue;
        const int fixed_points = n - p.sum_of_large_parts();
        if (fixed_points < ones) return Rat(0);
        factor *= Rat(binomial(static_cast<unsigned long>(fixed_points), static_cast<unsigned long>(ones)));
    }
    return factor;
}

// Shared state for one (genus, mus, max_n) computation: partition tables and
// transposition moves per sheet count, plus the disconnected and connected
// series per profile multiset.
class Pipeline {
public:
    Pipeline(int max_n, int max_t)
        : max_n_(max_n),
          max_t_(max_t),
          tables_(static_cast<size_t>(max_n) + 1),
          moves_(static_cast<size_t>(max_n) + 1) {}

    const BiSeries& disconnected(const ProfileTuple& t) {
        const std::string key = tuple_key(t);
        auto it = disc_.find(key);
        if (it != disc_.end()) return it->second;
        return disc_.emplace(key, build_disconnected(t)).first->second;
    }

    const BiSeries& connected(const ProfileTuple& t) {
        const std::string key = tuple_key(t);
        auto it = conn_.find(key);
        if (it != conn_.end()) return it->second;
        BiSeries value = build_connected(t);
        return conn_.emplace(key, std::move(value)).first->second;
    }

private:
    const PartitionTable& table(int n) {
        auto& slot = tables_[static_cast<size_t>(n)];
        if (!slot) slot = std::make_unique<PartitionTable>(n);
        return *slot;
    }

    const CutJoinMoves& cut_moves(int n) {
        auto& slot = moves_[static_cast<size_t>(n)];
        if (!slot) slot = std::make_unique<CutJoinMoves>(cut_join_moves(table(n)));
        return *slot;
    }

    BiSeries build_disconnected(const ProfileTuple& t) {
        BiSeries out(max_n_, max_t_);
        for (int n = 0; n <= max_n_; ++n) {
            bool feasible = true;
            for (const auto& p : t)
                if (p.sum_of_large_parts() > n) feasible = false;
            if (!feasible) continue;
            const Rat marking = marking_factor(t, n);
            if (marking == 0) continue;

            const PartitionTable& pt = table(n);
            const CutJoinMoves& mv = cut_moves(n);

            // Tuple counts: seed with the first branch class (or the
            // identity), convolve the remaining classes, then one
            // transposition step per column, reading the identity entry.
            std::vector<Int> f(static_cast<size_t>(pt.size()), Int(0));
            std::vector<Partition> classes;
            for (const auto& p : t)
                if (p.sum_of_large_parts() > 0) classes.push_back(completed_class(p, n));
            if (classes.empty()) {
                f[static_cast<size_t>(pt.identity_index())] = 1;
            } else {
                f[static_cast<size_t>(pt.index_of(classes.front()))] = 1;
                for (size_t i = 1; i < classes.size(); ++i) f = convolve_class(pt, f, classes[i]);
            }
            const Rat n_norm = Rat(factorial(static_cast<unsigned long>(n)));
            for (int step = 0; step <= max_t_; ++step) {
                if (step > 0) f = pull_step(mv, f);
                const Int& id_count = f[static_cast<size_t>(pt.identity_index())];
                if (id_count != 0)
                    out.set(n, step,
                            Rat(id_count) * marking /
                                (n_norm * Rat(factorial(static_cast<unsigned long>(step)))));
            }
        }
        return out;
    }

    BiSeries build_connected(const ProfileTuple& t) {
        if (tuple_empty(t)) return bi_log(disconnected(t));

        if (!e_inverse_) {
            ProfileTuple empty(t.size());
            e_inverse_ = std::make_unique<BiSeries>(bi_inverse(disconnected(empty)));
        }
        BiSeries result = disconnected(t) * (*e_inverse_);

        // disconnected * exp(-conn_empty) expands over the multisets of
        // nonempty positional sub-tuples covering t, with a factor
        // conn(alpha)^k / k! per block type; subtract everything with two or
        // more blocks. Positionally distinct blocks with equal profile
        // multisets share their conn value but count separately.
        const std::string full_key = tuple_key(t);
        std::vector<ProfileTuple> subs;
        for (const auto& sub : all_subtuples(t)) {
            if (tuple_empty(sub)) continue;
            if (tuple_key(sub) == full_key) continue;  // the single-block cover is conn(t) itself
            subs.push_back(sub);
        }

        BiSeries one(max_n_, max_t_);
        one.set(0, 0, Rat(1));
        std::function<void(size_t, const ProfileTuple&, int, const BiSeries&)> rec =
            [&](size_t idx, const ProfileTuple& remaining, int blocks, const BiSeries& product) {
                if (tuple_empty(remaining)) {
                    if (blocks >= 2) result = result - product;
                    return;
                }
                if (idx == subs.size()) return;
                rec(idx + 1, remaining, blocks, product);
                ProfileTuple rest = remaining;
                BiSeries power = product;
                int k = 0;
                while (tuple_contains(rest, subs[idx])) {
                    rest = tuple_subtract(rest, subs[idx]);
                    ++k;
                    power = power * connected(subs[idx]);
                    rec(idx + 1, rest, blocks + k,
                        scale(power, make_rat(1, factorial(static_cast<unsigned long>(k)))));
                }
            };
        rec(0, t, 0, one);
        return result;
    }

    int max_n_;
    int max_t_;
    std::vector<std::unique_ptr<PartitionTable>> tables_;
    std::vector<std::unique_ptr<CutJoinMoves>> moves_;
    std::map<std::string, BiSeries> disc_;
    std::map<std::string, BiSeries> conn_;
    std::unique_ptr<BiSeries> e_inverse_;
};

int query_degeneracy(const std::vector<Partition>& mus) {
    int r = 0;
    for (const auto& mu : mus) r += mu.degeneracy();
    return r;
}

}  // namespace

Rat disconnected_count(const HurwitzQuery& q) {
    const int c = q.simple_point_count();
    if (c < 0) return Rat(0);
    require_guard(q.n <= 30, "class-algebra dynamics supports n <= 30");
    if (q.n == 0) return Rat(tuple_empty(q.mus) ? 1 : 0);

    for (const auto& mu : q.mus)
        if (mu.sum() > q.n) return Rat(0);
    const Rat marking = marking_factor(q.mus, q.n);
    if (marking == 0) return Rat(0);

    const PartitionTable pt(q.n);
    std::vector<Partition> classes;
    for (const auto& mu : q.mus)
        if (mu.sum_of_large_parts() > 0) classes.push_back(completed_class(mu, q.n));

    std::vector<Int> f(static_cast<size_t>(pt.size()), Int(0));
    if (classes.empty()) {
        f[static_cast<size_t>(pt.identity_index())] = 1;
    } else {
        f[static_cast<size_t>(pt.index_of(classes.front()))] = 1;
        for (size_t i = 1; i < classes.size(); ++i) f = convolve_class(pt, f, classes[i]);
    }
    if (c > 0) {
        const CutJoinMoves mv = cut_join_moves(pt);
        for (int step = 0; step < c; ++step) f = pull_step(mv, f);
    }
    return Rat(f[static_cast<size_t>(pt.identity_index())]) * marking /
           Rat(factorial(static_cast<unsigned long>(q.n)));
}

std::pair<BiSeries, BiSeries> hurwitz_tables(const std::vector<Partition>& mus, int max_n, int max_t) {
    require_guard(max_n <= 30, "class-algebra dynamics supports n <= 30");
    Pipeline pipeline(max_n, max_t);
    return {pipeline.disconnected(mus), pipeline.connected(mus)};
}

std::vector<Rat> connected_counts(int genus, const std::vector<Partition>& mus, int max_n) {
    require_guard(max_n <= 30, "class-algebra dynamics supports n <= 30");
    const int r = query_degeneracy(mus);
    const int max_t = std::max(0, 2 * max_n + 2 * genus - 2 - r);
    Pipeline pipeline(max_n, max_t);
    const BiSeries& conn = pipeline.connected(mus);

    std::vector<Rat> out(static_cast<size_t>(max_n) + 1, Rat(0));
    for (int n = 1; n <= max_n; ++n) {
        const int t = 2 * n + 2 * genus - 2 - r;
        if (t < 0 || t > max_t) continue;
        out[static_cast<size_t>(n)] = conn.at(n, t) * Rat(factorial(static_cast<unsigned long>(t)));
    }
    return out;
}

Rat genus0_closed(int n, const Partition& mu) {
    if (n < 1) throw atlas_error("bad_input", "genus-0 formula needs n >= 1");
    const int p = mu.count();
    const int r = mu.degeneracy();
    if (n < p + r) return Rat(0);
    const long c = 2L * n - 2 - r;
    if (c < 0) return Rat(0);
    Rat value = Rat(factorial(static_cast<unsigned long>(c))) / Rat(mu.aut());
    for (int b : mu.parts)
        value *= make_rat(int_pow(Int(b), static_cast<unsigned long>(b)),
                          factorial(static_cast<unsigned long>(b)));
    value *= rat_pow(Rat(n), n - r - 3);
    value /= Rat(factorial(static_cast<unsigned long>(n - p - r)));
    return value;
}

namespace {

// Union-find with an undo stack for the transitivity bookkeeping inside the
// oracle recursion.
struct UnionFind {
    std::vector<int> parent;
    std::vector<int> size;
    std::vector<std::pair<int, int>> undo;  // (demoted root, old size of the surviving root)
    int components;

    explicit UnionFind(int n) : parent(static_cast<size_t>(n)), size(static_cast<size_t>(n), 1), components(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) const {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        undo.emplace_back(b, size[static_cast<size_t>(a)]);
        size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
        --components;
    }

    void rollback(size_t mark) {
        while (undo.size() > mark) {
            auto [child, old_size] = undo.back();
            undo.pop_back();
            const int root = parent[static_cast<size_t>(child)];
            size[static_cast<size_t>(root)] = old_size;
            parent[static_cast<size_t>(child)] = child;
            ++components;
        }
    }
};

std::vector<int> class_representative(const Partition& p, int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int base = 0;
    for (int part : p.parts) {
        for (int i = 0; i < part; ++i) perm[static_cast<size_t>(base + i)] = base + (i + 1) % part;
        base += part;
    }
    return perm;
}

}  // namespace

Rat brute_force_oracle(const HurwitzQuery& q) {
    require_guard(q.n <= 6 && q.simple_point_count() <= 10, "oracle supports n <= 6 and c(n) <= 10");
    const int n = q.n;
    const int c = q.simple_point_count();
    if (c < 0) return Rat(0);
    if (n < 1) throw atlas_error("bad_input", "oracle needs n >= 1");
    for (const auto& mu : q.mus)
        if (mu.sum() > n) return Rat(0);

    const Rat marking = marking_factor(q.mus, n);
    if (marking == 0) return Rat(0);

    std::vector<Partition> classes;
    for (const auto& mu : q.mus)
        if (mu.sum_of_large_parts() > 0) classes.push_back(completed_class(mu, n));

    // Parity screen: the branch permutations and c transpositions can only
    // multiply to the identity when the total sign is even.
    int sign = c;
    for (const auto& cls : classes) sign += cls.degeneracy();
    if (sign % 2 != 0) return Rat(0);

    if (c > 0 && n < 2) return Rat(0);  // no transpositions on fewer than two sheets

    std::vector<std::pair<int, int>> transpositions;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) transpositions.emplace_back(a, b);

    Int total(0);
    std::vector<int> running(static_cast<size_t>(n));
    UnionFind uf(n);

    auto cycles_of = [&](const std::vector<int>& perm) {
        int count = 0;
        std::vector<char> seen(perm.size(), 0);
        for (size_t i = 0; i < perm.size(); ++i) {
            if (seen[i]) continue;
            ++count;
            size_t at = i;
            while (!seen[at]) {
                seen[at] = 1;
                at = static_cast<size_t>(perm[at]);
            }
        }
        return count;
    };

    auto same_cycle = [&](int a, int b) {
        int at = running[static_cast<size_t>(a)];
        while (at != a) {
            if (at == b) return true;
            at = running[static_cast<size_t>(at)];
        }
        return false;
    };

    // Prunes: the identity needs n cycles, one transposition changes the
    // cycle count by one; transitivity needs a single component, one
    // transposition merges at most two.
    std::function<void(int, int)> tau_rec = [&](int depth, int cycles) {
        const int remaining = c - depth;
        if (n - cycles > remaining) return;
        if (uf.components - 1 > remaining) return;
        if (remaining == 0) {
            if (cycles == n && uf.components == 1) ++total;
            return;
        }
        for (const auto& [a, b] : transpositions) {
            const bool cut = same_cycle(a, b);
            std::swap(running[static_cast<size_t>(a)], running[static_cast<size_t>(b)]);
            const size_t mark = uf.undo.size();
            uf.unite(a, b);
            tau_rec(depth + 1, cycles + (cut ? 1 : -1));
            uf.rollback(mark);
            std::swap(running[static_cast<size_t>(a)], running[static_cast<size_t>(b)]);
        }
    };

    // The full count is conjugation invariant, so the first factor may be
    // pinned to a class representative and weighted by its class size.
    Int pinned_weight(1);
    auto start_taus = [&] {
        const size_t mark = uf.undo.size();
        if (classes.empty() && c >= 1) {
            std::swap(running[0], running[1]);
            uf.unite(0, 1);
            tau_rec(1, cycles_of(running));
            uf.rollback(mark);
            std::swap(running[0], running[1]);
        } else {
            tau_rec(0, cycles_of(running));
        }
    };

    std::function<void(size_t)> sigma_rec = [&](size_t idx) {
        if (idx == classes.size()) {
            start_taus();
            return;
        }
        auto apply_sigma = [&](const std::vector<int>& sigma) {
            std::vector<int> saved = running;
            for (int i = 0; i < n; ++i)
                running[static_cast<size_t>(i)] = saved[static_cast<size_t>(sigma[static_cast<size_t>(i)])];
            const size_t mark = uf.undo.size();
            for (int i = 0; i < n; ++i) uf.unite(i, sigma[static_cast<size_t>(i)]);
            sigma_rec(idx + 1);
            uf.rollback(mark);
            running = saved;
        };
        if (idx == 0) {
            apply_sigma(class_representative(classes[0], n));
        } else {
            for_each_in_class(n, classes[idx], apply_sigma);
        }
    };

    std::iota(running.begin(), running.end(), 0);
    if (classes.empty()) {
        if (c >= 1) pinned_weight = Int(n) * Int(n - 1) / 2;
        start_taus();
    } else {
        pinned_weight = class_size(n, classes[0]);
        sigma_rec(0);
    }

    return Rat(total * pinned_weight) * marking / Rat(factorial(static_cast<unsigned long>(n)));
}

PowerSeries h_series(int genus, const std::vector<Partition>& mus, int order) {
    const int r = query_degeneracy(mus);
    const auto counts = connected_counts(genus, mus, order);
    PowerSeries out(order);
    for (int n = 1; n <= order; ++n) {
        const int c = 2 * n + 2 * genus - 2 - r;
        if (c < 0) continue;
        if (counts[static_cast<size_t>(n)] == 0) continue;
        out.set(n, counts[static_cast<size_t>(n)] / Rat(factorial(static_cast<unsigned long>(c))));
    }
    return out;
}

std::variant<GravityFit, FitFailure> fit_and_b(int genus, const std::vector<Partition>& mus, int order,
                                               int window_cap, int holdout) {
    const PowerSeries series = h_series(genus, mus, order);
    FitFailure last{"window cap reached before a feasible window", std::nullopt};
    for (int window = 1; window <= window_cap; ++window) {
        if (2 * window + holdout > order) break;
        FitResult result = fit(series, window, holdout);
        if (fit_succeeded(result)) {
            AElement element = std::get<AElement>(result);
            AsymptoticTerm leading = leading_asymptotic(element);
            return GravityFit{std::move(element), window, std::move(leading)};
        }
        last = std::get<FitFailure>(result);
    }
    return last;
}

}  // namespace hurwitz_atlas
