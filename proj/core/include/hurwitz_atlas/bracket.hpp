#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hurwitz_atlas/monomials.hpp"
#include "hurwitz_atlas/multigraph.hpp"
#include "hurwitz_atlas/power_series.hpp"
#include "hurwitz_atlas/rational.hpp"

namespace hurwitz_atlas {

enum class ClosedBracketKind { g0, g1, g1beta };

// Exceptional-genus closed forms. Each vanishes off its degree shell:
// g0 needs sum d = n-3, g1 needs sum d = n, g1beta needs sum d = n-1.
Rat closed_bracket(ClosedBracketKind kind, const Monomial& m);

// A bracket determined by string/dilaton recursion from finitely many
// initial values. For genus >= 2 the initial monomials have every index
// >= 2 (nothing left to simplify); stored values always act as recursion
// floors, which is how the exceptional genus-0 seed at <tau_0^3> enters.
class BracketTable {
public:
    BracketTable(int genus, std::optional<int> pure_degree, std::map<Monomial, Rat> initial_values);

    int genus() const { return genus_; }
    std::optional<int> pure_degree() const { return pure_degree_; }
    const std::map<Monomial, Rat>& initial_values() const { return initial_values_; }

private:
    int genus_;
    std::optional<int> pure_degree_;  // nullopt: mixed nonnegative degree
    std::map<Monomial, Rat> initial_values_;
    // Shared, synchronized memo: concurrent eval calls on one table are
    // deterministic. The lock is never held across the recursion.
    mutable std::map<Monomial, Rat> memo_;
    mutable std::unique_ptr<std::mutex> memo_mutex_ = std::make_unique<std::mutex>();

    friend Rat eval(const BracketTable& table, Monomial m);
};

// Recursive evaluation: a zero index is removed by the string relation, a
// one by the dilaton relation, all remaining indices >= 2 are looked up in
// the initial values (default 0). Memoized per table.
Rat eval(const BracketTable& table, Monomial m);

struct BracketFn {
    int genus = 0;
    int degree_floor = 0;  // pure degree, or 0 for mixed nonnegative degree
    bool pure = true;      // true: only sum d = 3g-3+n - degree_floor contributes
    std::function<Rat(const Monomial&)> value;
};

BracketFn bracket_fn(ClosedBracketKind kind);
BracketFn bracket_fn(const BracketTable& table);

// F(q) = sum_n q^n/n! sum_d <tau_{d_1}...tau_{d_n}>. The two terms q + q^2/4
// conventionally prepended to the genus-0 series are added only on request.
PowerSeries f_series(const BracketFn& bracket, int order, bool add_genus0_convention_terms = false);
PowerSeries f_series(const BracketTable& table, int order);

// sum_n q^n/(n-p-r)! sum_d b_1^{d_1}...b_p^{d_p} <tau_{d_1}...tau_{d_{n-r}}>
// with r = sum(b_i - 1); the first p points are distinguished and ordered.
PowerSeries weighted_f_series(const BracketFn& bracket, const std::vector<int>& weights, int order);

// One simple graph per initial value: anonymous valencies d_i + 1, star
// valency b + g - 1, Euler characteristic 3 - 2g; preferred from the
// catalog, otherwise constructed. Paired with the coefficient
// q_v * |Aut(H_v)| / (prod of index multiplicities)!, which makes the
// combination of H-brackets reproduce the table's values; the multiset
// factor is forced whenever a seed monomial repeats an index.
std::vector<std::pair<SimpleGraphH, Rat>> decompose_to_graphs(
    const BracketTable& table, const std::vector<NamedGraph>& catalog = genus2_catalog());

// The reference genus-2 initial values <tau_4>, <tau_2 tau_3>,
// <tau_2 tau_2 tau_2>.
BracketTable genus2_bracket_table();

std::string monomial_to_string(const Monomial& m);
Monomial monomial_from_string(const std::string& text);

}  // namespace hurwitz_atlas
