#include "hurwitz_atlas/bracket.hpp"

#include <algorithm>
#include <sstream>

namespace hurwitz_atlas {

namespace {

Rat factorial_product(const Monomial& m) {
    Int prod(1);
    for (int d : m) prod *= factorial(static_cast<unsigned long>(d));
    return Rat(prod);
}

int monomial_sum(const Monomial& m) {
    int s = 0;
    for (int d : m) s += d;
    return s;
}

}  // namespace

Rat closed_bracket(ClosedBracketKind kind, const Monomial& m) {
    const int n = static_cast<int>(m.size());
    const int sum = monomial_sum(m);
    switch (kind) {
        case ClosedBracketKind::g0: {
            if (sum != n - 3) return Rat(0);
            return Rat(factorial(static_cast<unsigned long>(n - 3))) / factorial_product(m);
        }
        case ClosedBracketKind::g1beta: {
            if (sum != n - 1) return Rat(0);
            return Rat(factorial(static_cast<unsigned long>(n - 1))) / factorial_product(m);
        }
        case ClosedBracketKind::g1: {
            if (sum != n) return Rat(0);
            // Elementary symmetric functions of the indices.
            std::vector<Rat> sigma(static_cast<size_t>(n) + 1, Rat(0));
            sigma[0] = Rat(1);
            int used = 0;
            for (int d : m) {
                ++used;
                for (int j = used; j >= 1; --j)
                    sigma[static_cast<size_t>(j)] += Rat(d) * sigma[static_cast<size_t>(j - 1)];
            }
            Rat acc = Rat(factorial(static_cast<unsigned long>(n)));
            for (int j = 2; j <= n; ++j)
                acc -= Rat(factorial(static_cast<unsigned long>(j - 2)) *
                           factorial(static_cast<unsigned long>(n - j))) *
                       sigma[static_cast<size_t>(j)];
            return acc / (Rat(24) * factorial_product(m));
        }
    }
    throw atlas_error("internal", "unknown closed bracket kind");
}

BracketTable::BracketTable(int genus, std::optional<int> pure_degree, std::map<Monomial, Rat> initial_values)
    : genus_(genus), pure_degree_(pure_degree), initial_values_(std::move(initial_values)) {
    for (const auto& [m, value] : initial_values_) {
        (void)value;
        if (!std::is_sorted(m.begin(), m.end()))
            throw atlas_error("bad_input", "initial-value monomials must be sorted");
        if (pure_degree_) {
            const int n = static_cast<int>(m.size());
            if (*pure_degree_ + monomial_sum(m) != 3 * genus_ - 3 + n)
                throw atlas_error("bad_input", "initial value off the degree shell");
        }
    }
}

Rat eval(const BracketTable& table, Monomial m) {
    std::sort(m.begin(), m.end());

    // Degree screens; the recursion preserves both conditions.
    const int n = static_cast<int>(m.size());
    const int sum = monomial_sum(m);
    if (table.pure_degree_) {
        if (*table.pure_degree_ + sum != 3 * table.genus_ - 3 + n) return Rat(0);
    } else if (sum > 3 * table.genus_ - 3 + n) {
        return Rat(0);
    }

    {
        std::lock_guard<std::mutex> lock(*table.memo_mutex_);
        if (auto it = table.memo_.find(m); it != table.memo_.end()) return it->second;
    }

    // Stored values are recursion floors: they win over the relations. For
    // the usual tables every stored index is >= 2 and no relation applies
    // anyway; the exceptional genus-0 seed at three zero indices relies on
    // stopping here.
    if (auto it = table.initial_values_.find(m); it != table.initial_values_.end()) return it->second;

    Rat result(0);
    if (!m.empty() && m.front() == 0) {
        // String relation: remove the tau_0, lowering one other index.
        Monomial rest(m.begin() + 1, m.end());
        for (size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] == 0) continue;  // lowering to tau_{-1} contributes nothing
            if (i + 1 < rest.size() && rest[i] == rest[i + 1]) continue;  // same reduced multiset
            Monomial smaller = rest;
            smaller[i] -= 1;
            result += Rat(std::count(rest.begin(), rest.end(), rest[i])) * eval(table, smaller);
        }
    } else if (!m.empty() && m.front() == 1) {
        // Dilaton relation: remove the tau_1 against the factor 2g-2+n'.
        Monomial rest(m.begin() + 1, m.end());
        result = Rat(2 * table.genus_ - 2 + static_cast<int>(rest.size())) * eval(table, rest);
    }
    table.memo_.emplace(std::move(m), result);
    return result;
}

BracketFn bracket_fn(ClosedBracketKind kind) {
    BracketFn fn;
    fn.value = [kind](const Monomial& m) { return closed_bracket(kind, m); };
    switch (kind) {
        case ClosedBracketKind::g0:
            fn.genus = 0;
            fn.degree_floor = 0;
            break;
        case ClosedBracketKind::g1:
            fn.genus = 1;
            fn.degree_floor = 0;
            break;
        case ClosedBracketKind::g1beta:
            fn.genus = 1;
            fn.degree_floor = 1;
            break;
    }
    fn.pure = true;
    return fn;
}

BracketFn bracket_fn(const BracketTable& table) {
    BracketFn fn;
    fn.genus = table.genus();
    fn.pure = table.pure_degree().has_value();
    fn.degree_floor = table.pure_degree().value_or(0);
    fn.value = [&table](const Monomial& m) { return eval(table, m); };
    return fn;
}

namespace {

// Inner sum over unordered monomials of the given size, weighted by the
// number of ordered tuples.
Rat bracket_layer(const BracketFn& bracket, int n) {
    const int cap = 3 * bracket.genus - 3 + n - bracket.degree_floor;
    if (cap < 0) return Rat(0);
    Rat acc(0);
    auto add = [&](const Monomial& m) {
        const Rat v = bracket.value(m);
        if (v != 0) acc += Rat(monomial_multiplicity(m)) * v;
    };
    if (bracket.pure) {
        for_each_monomial(n, cap, add);
    } else {
        for (int total = 0; total <= cap; ++total) for_each_monomial(n, total, add);
    }
    return acc;
}

}  // namespace

PowerSeries f_series(const BracketFn& bracket, int order, bool add_genus0_convention_terms) {
    PowerSeries result(order);
    for (int n = 0; n <= order; ++n) {
        const Rat layer = bracket_layer(bracket, n);
        if (layer != 0) result.set(n, layer / Rat(factorial(static_cast<unsigned long>(n))));
    }
    if (add_genus0_convention_terms) {
        if (order >= 1) result.set(1, result[1] + 1);
        if (order >= 2) result.set(2, result[2] + make_rat(1, 4));
    }
    return result;
}

PowerSeries f_series(const BracketTable& table, int order) { return f_series(bracket_fn(table), order); }

PowerSeries weighted_f_series(const BracketFn& bracket, const std::vector<int>& weights, int order) {
    const int p = static_cast<int>(weights.size());
    int r = 0;
    for (int b : weights) {
        if (b < 1) throw atlas_error("bad_input", "weights must be positive integers");
        r += b - 1;
    }
    PowerSeries result(order);
    for (int n = p + r; n <= order; ++n) {
        const int points = n - r;  // marked points on the curve
        const int cap = 3 * bracket.genus - 3 + points - bracket.degree_floor;
        if (cap < 0 || points < p) continue;
        Rat acc(0);
        // Ordered indices for the p distinguished points, an unordered
        // multiset for the rest.
        std::vector<int> front(static_cast<size_t>(p), 0);
        auto rec = [&](auto&& self, int slot, int used, Rat weight_prod) -> void {
            if (slot == p) {
                const int rest = points - p;
                auto add = [&](const Monomial& tail) {
                    Monomial full = front;
                    full.insert(full.end(), tail.begin(), tail.end());
                    std::sort(full.begin(), full.end());
                    const Rat v = bracket.value(full);
                    if (v != 0) acc += weight_prod * Rat(monomial_multiplicity(tail)) * v;
                };
                if (bracket.pure) {
                    if (cap - used >= 0) for_each_monomial(rest, cap - used, add);
                } else {
                    for (int total = 0; total <= cap - used; ++total) for_each_monomial(rest, total, add);
                }
                return;
            }
            for (int d = 0; used + d <= cap; ++d) {
                front[static_cast<size_t>(slot)] = d;
                self(self, slot + 1, used + d,
                     weight_prod * rat_pow(Rat(weights[static_cast<size_t>(slot)]), d));
            }
        };
        rec(rec, 0, 0, Rat(1));
        if (acc != 0) result.set(n, acc / Rat(factorial(static_cast<unsigned long>(n - p - r))));
    }
    return result;
}

std::vector<std::pair<SimpleGraphH, Rat>> decompose_to_graphs(const BracketTable& table,
                                                              const std::vector<NamedGraph>& catalog) {
    const int g = table.genus();
    std::vector<std::pair<SimpleGraphH, Rat>> result;
    for (const auto& [m, q_v] : table.initial_values()) {
        const int size = static_cast<int>(m.size());
        const int b = 3 * g - 3 + size - monomial_sum(m);
        const int star_val = b + g - 1;
        if (star_val <= 0) throw atlas_error("degree_range", "degree/genus out of range");

        std::vector<int> wanted(m.size());
        for (size_t i = 0; i < m.size(); ++i) wanted[i] = m[i] + 1;
        std::sort(wanted.begin(), wanted.end());

        const SimpleGraphH* found = nullptr;
        for (const auto& entry : catalog) {
            if (entry.graph.p != 0) continue;
            if (entry.graph.star_valency() != star_val) continue;
            if (entry.graph.euler_characteristic() != 3 - 2 * g) continue;
            std::vector<int> have;
            for (int v = 0; v < entry.graph.graph.vertex_count(); ++v)
                if (entry.graph.graph.vertex(v).kind == VertexKind::anon)
                    have.push_back(entry.graph.graph.valency(v));
            std::sort(have.begin(), have.end());
            if (have == wanted) {
                found = &entry.graph;
                break;
            }
        }
        SimpleGraphH h = found != nullptr ? *found : construct_simple_graph(wanted, star_val);
        // The coefficient must reproduce the stored seed: the extensions at
        // the seed monomial are the numberings of H_v itself, and repeated
        // indices admit (prod of index multiplicities)! of them per
        // symmetry class. |Aut(H_v)| alone overshoots by exactly that
        // multiset factor.
        Int index_aut(1);
        size_t i = 0;
        while (i < m.size()) {
            size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            index_aut *= factorial(static_cast<unsigned long>(j - i));
            i = j;
        }
        const Rat coeff = q_v * Rat(automorphism_count(h.graph)) / Rat(index_aut);
        result.emplace_back(std::move(h), coeff);
    }
    return result;
}

BracketTable genus2_bracket_table() {
    std::map<Monomial, Rat> values;
    values[{4}] = make_rat(1, 1152);
    values[{2, 3}] = make_rat(29, 5760);
    values[{2, 2, 2}] = make_rat(7, 240);
    return BracketTable(2, 0, std::move(values));
}

std::string monomial_to_string(const Monomial& m) {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(m[i]);
    }
    return out;
}

Monomial monomial_from_string(const std::string& text) {
    Monomial m;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        const int value = std::stoi(item, &pos);
        if (pos != item.size() || value < 0) throw atlas_error("bad_input", "bad monomial entry: '" + item + "'");
        m.push_back(value);
    }
    std::sort(m.begin(), m.end());
    return m;
}

}  // namespace hurwitz_atlas
