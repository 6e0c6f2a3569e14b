#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hurwitz_atlas/bracket.hpp"
#include "hurwitz_atlas/hurwitz.hpp"
#include "hurwitz_atlas/serialization.hpp"

using namespace hurwitz_atlas;

namespace {

Monomial with_extra(Monomial m, int extra) {
    m.push_back(extra);
    std::sort(m.begin(), m.end());
    return m;
}

// sum over positions of the bracket with one index lowered.
Rat string_right_side(const std::function<Rat(const Monomial&)>& value, const Monomial& m) {
    Rat acc(0);
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        Monomial lowered = m;
        lowered[i] -= 1;
        std::sort(lowered.begin(), lowered.end());
        acc += value(lowered);
    }
    return acc;
}

}  // namespace

TEST_CASE("closed bracket values") {
    CHECK(closed_bracket(ClosedBracketKind::g0, {0, 0, 0}) == 1);
    CHECK(closed_bracket(ClosedBracketKind::g0, {0, 0, 1}) == 0);
    CHECK(closed_bracket(ClosedBracketKind::g1, {1}) == make_rat(1, 24));
    CHECK(closed_bracket(ClosedBracketKind::g1, {0, 2}) == make_rat(1, 24));
    CHECK(closed_bracket(ClosedBracketKind::g1beta, {0}) == 1);
}

TEST_CASE("string and dilaton hold for the closed brackets") {
    // The relations compare brackets at n+1 and n points; the n-point side
    // must exist, which needs n >= 3 at genus 0 and n >= 1 at genus 1.
    struct Kind {
        ClosedBracketKind kind;
        int genus;
        int min_points;
    };
    for (const auto& [kind, genus, min_points] :
         std::vector<Kind>{{ClosedBracketKind::g0, 0, 3},
                           {ClosedBracketKind::g1, 1, 1},
                           {ClosedBracketKind::g1beta, 1, 1}}) {
        auto value = [kind = kind](const Monomial& m) { return closed_bracket(kind, m); };
        for (int n = min_points; n <= 7; ++n) {
            for (int total = 0; total <= std::min(10, n + 2); ++total) {
                for_each_monomial(n, total, [&](const Monomial& m) {
                    CHECK(value(with_extra(m, 0)) == string_right_side(value, m));
                    CHECK(value(with_extra(m, 1)) == Rat(2 * genus - 2 + n) * value(m));
                });
            }
        }
    }
}

TEST_CASE("recursion on the genus-0 seed equals the closed form") {
    const BracketTable table(0, 0, {{Monomial{0, 0, 0}, Rat(1)}});
    for (int n = 0; n <= 8; ++n) {
        for (int total = 0; total <= 8; ++total) {
            for_each_monomial(n, total, [&](const Monomial& m) {
                CHECK(eval(table, m) == closed_bracket(ClosedBracketKind::g0, m));
            });
        }
    }
}

TEST_CASE("eval on the genus-2 table") {
    const BracketTable table = genus2_bracket_table();
    CHECK(eval(table, {0, 5}) == make_rat(1, 1152));
    CHECK(eval(table, {1, 4}) == make_rat(1, 384));
    CHECK(eval(table, {4}) == make_rat(1, 1152));
    CHECK(eval(table, {2, 3}) == make_rat(29, 5760));
    CHECK(eval(table, {3, 3}) == 0);  // off the degree shell
    CHECK(eval(table, {0, 0, 0}) == 0);
}

TEST_CASE("string and dilaton drive the genus-2 table") {
    const BracketTable table = genus2_bracket_table();
    auto value = [&](const Monomial& m) { return eval(table, m); };
    for (int n = 0; n <= 5; ++n) {
        for (int total = 0; total <= 9; ++total) {
            for_each_monomial(n, total, [&](const Monomial& m) {
                CHECK(value(with_extra(m, 0)) == string_right_side(value, m));
                CHECK(value(with_extra(m, 1)) == Rat(2 + n) * value(m));
            });
        }
    }
}

TEST_CASE("vanishing off the degree shell") {
    const BracketTable table = genus2_bracket_table();
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> size(0, 6);
    std::uniform_int_distribution<int> entry(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        Monomial m(static_cast<size_t>(size(rng)));
        for (auto& d : m) d = entry(rng);
        std::sort(m.begin(), m.end());
        int total = 0;
        for (int d : m) total += d;
        if (total != 3 + static_cast<int>(m.size())) CHECK(eval(table, m) == 0);
    }
}

TEST_CASE("decomposition into simple graphs") {
    const BracketTable table = genus2_bracket_table();
    const auto decomposition = decompose_to_graphs(table);
    REQUIRE(decomposition.size() == 3);
    // Initial values are keyed by monomial in sorted order: (2,2,2), (2,3), (4).
    // The symmetry factors are 4, 4, 8; the first seed repeats its index
    // three times, which costs a further 3!.
    CHECK(decomposition[0].second == make_rat(7, 240) * 4 / 6);
    CHECK(decomposition[1].second == make_rat(29, 5760) * 4);
    CHECK(decomposition[2].second == make_rat(1, 1152) * 8);
    CHECK(isomorphic_fixing_labels(decomposition[2].first.graph, catalog_h4().graph));
    CHECK(isomorphic_fixing_labels(decomposition[1].first.graph, catalog_h23().graph));
    CHECK(isomorphic_fixing_labels(decomposition[0].first.graph, catalog_h222().graph));

    // The combination of extension brackets reproduces the recursion,
    // including at the repeated-index seed.
    for (const Monomial& m :
         {Monomial{4}, Monomial{2, 3}, Monomial{2, 2, 2}, Monomial{0, 5}, Monomial{0, 2, 4},
          Monomial{1, 2, 3}, Monomial{0, 0, 0, 7}, Monomial{2, 2, 3}}) {
        std::vector<int> valencies(m.size());
        for (size_t i = 0; i < m.size(); ++i) valencies[i] = m[i] + 1;
        Rat combined(0);
        for (const auto& [h, coeff] : decomposition) combined += coeff * h_bracket(h, valencies, 0);
        CHECK(combined == eval(table, m));
    }

    // A single initial value gives a single pair, and an empty table nothing.
    const BracketTable lone(2, std::nullopt, {{Monomial{4}, Rat(1)}});
    const auto single = decompose_to_graphs(lone);
    REQUIRE(single.size() == 1);
    CHECK(single[0].second == 8);
    CHECK(decompose_to_graphs(BracketTable(2, std::nullopt, {})).empty());
}

TEST_CASE("decomposition works without the catalog") {
    const BracketTable table = genus2_bracket_table();
    const auto decomposition = decompose_to_graphs(table, {});
    REQUIRE(decomposition.size() == 3);
    // Any choice of graphs with the right valencies carries the same series.
    PowerSeries total(8);
    for (const auto& [h, coeff] : decomposition)
        total = total + to_series(scale(f_h_closed_form(h), coeff), 8);
    CHECK(total == f_series(table, 8));
}

TEST_CASE("the genus-0 series with convention terms") {
    const PowerSeries f = f_series(bracket_fn(ClosedBracketKind::g0), 12, true);
    for (int n = 1; n <= 12; ++n)
        CHECK(f[n] == rat_pow(Rat(n), n - 3) / Rat(factorial(static_cast<unsigned long>(n))));
    // Without the flag the two low terms correspond to nothing and stay 0.
    const PowerSeries bare = f_series(bracket_fn(ClosedBracketKind::g0), 4);
    CHECK(bare[1] == 0);
    CHECK(bare[2] == 0);
    CHECK(bare[3] == make_rat(1, 6));
}

TEST_CASE("the degree-2 genus-1 series is Y") {
    CHECK(f_series(bracket_fn(ClosedBracketKind::g1beta), 12) == gen_y(12));
}

TEST_CASE("the genus-1 inner sum") {
    const PowerSeries f = f_series(bracket_fn(ClosedBracketKind::g1), 10);
    for (int n = 1; n <= 10; ++n) {
        const Rat expected = (Rat(a_number(n)) / Rat(n) +
                              Rat(int_pow(Int(n), static_cast<unsigned long>(n - 1)))) /
                             Rat(24 * factorial(static_cast<unsigned long>(n)));
        CHECK(f[n] == expected);
    }
}

TEST_CASE("the genus-2 series in closed form") {
    const BracketTable table = genus2_bracket_table();
    const PowerSeries f = f_series(table, 10);
    YZPoly combo;
    // Y(1+Z)^3/1152 + 29 Y^2 (1+Z)^4/5760 + 7 Y^3 (1+Z)^5/1440, expanded in
    // powers of Z by the binomial theorem. The last denominator carries the
    // 3! from the repeated index of the seed <tau_2^3>; with 240 instead
    // the right-hand side would be a bracket whose seed there is 7/40.
    auto add_term = [&combo](int y_pow, int one_plus_z_pow, const Rat& c) {
        for (int j = 0; j <= one_plus_z_pow; ++j)
            combo[{y_pow, j}] += c * Rat(binomial(static_cast<unsigned long>(one_plus_z_pow),
                                                  static_cast<unsigned long>(j)));
    };
    add_term(1, 3, make_rat(1, 1152));
    add_term(2, 4, make_rat(29, 5760));
    add_term(3, 5, make_rat(7, 1440));
    CHECK(f == to_series(from_yz_poly(combo), 10));

    // The same series out of the graph decomposition.
    PowerSeries assembled(10);
    for (const auto& [h, coeff] : decompose_to_graphs(table))
        assembled = assembled + to_series(scale(f_h_closed_form(h), coeff), 10);
    CHECK(f == assembled);
}

TEST_CASE("genus-1 free energy leaves the algebra but its D-image returns") {
    const PowerSeries f = f_series(bracket_fn(ClosedBracketKind::g1), 28);
    for (int window = 1; window <= 10; ++window) {
        if (2 * window + 8 > 28) break;
        CHECK_FALSE(fit_succeeded(fit(f, window, 8)));
    }
    const FitResult d_image = fit(d_operator(f), 4, 8);
    REQUIRE(fit_succeeded(d_image));
    // DF = (Z + Z^2)/24 = (X^{-2} - X^{-1})/24.
    LaurentMap expected;
    laurent_add(expected, -2, make_rat(1, 24));
    laurent_add(expected, -1, make_rat(-1, 24));
    CHECK(std::get<AElement>(d_image) == AElement(expected));
}

TEST_CASE("weighted series with unit weight distinguishes one point") {
    const BracketTable table = genus2_bracket_table();
    const PowerSeries plain = f_series(table, 9);
    const PowerSeries weighted = weighted_f_series(bracket_fn(table), {1}, 9);
    for (int n = 0; n <= 9; ++n) CHECK(weighted[n] == Rat(n) * plain[n]);

    const PowerSeries weighted_g1beta = weighted_f_series(bracket_fn(ClosedBracketKind::g1beta), {1}, 20);
    const FitResult r = fit(weighted_g1beta, 4, 8);
    CHECK(fit_succeeded(r));
}

TEST_CASE("weighted genus-0 series against the covering formula") {
    // Splitting off the prefactor of the one-partition covering count
    // leaves exactly the weighted series of the genus-0 bracket, on the
    // range where the bracket side is defined: with one weighted point of
    // weight 2, the curve carries n-1 points, so n >= 4. The covering
    // formula itself is also valid at n = 2, 3; those terms play the role
    // of the q + q^2/4 convention terms of the plain series and are not
    // generated by the bracket.
    const PowerSeries weighted = weighted_f_series(bracket_fn(ClosedBracketKind::g0), {2}, 12);
    for (int n = 4; n <= 12; ++n) {
        const Rat prefactor = Rat(factorial(static_cast<unsigned long>(2 * n - 3))) * Rat(2);
        CHECK(weighted[n] == genus0_closed(n, Partition::parse("2")) / prefactor);
    }
    CHECK(weighted[0] == 0);
    CHECK(weighted[1] == 0);
    CHECK(weighted[2] == 0);
    CHECK(weighted[3] == 0);
    CHECK(genus0_closed(2, Partition::parse("2")) / Rat(2) == make_rat(1, 4));
    CHECK(genus0_closed(3, Partition::parse("2")) / Rat(12) == make_rat(1, 3));
}

TEST_CASE("bracket table JSON round trip") {
    const BracketTable table = genus2_bracket_table();
    const BracketTable round = bracket_table_from_json(bracket_table_to_json(table));
    CHECK(round.genus() == table.genus());
    CHECK(round.pure_degree() == table.pure_degree());
    CHECK(round.initial_values() == table.initial_values());

    CHECK_THROWS_AS(BracketTable(2, 0, {{Monomial{2, 2}, Rat(1)}}), atlas_error);
}
