#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hurwitz_atlas/class_algebra.hpp"
#include "hurwitz_atlas/hurwitz.hpp"

using namespace hurwitz_atlas;

namespace {

Partition part(const std::string& text) { return Partition::parse(text); }

ClassVector random_vector(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    const PartitionTable table(n);
    ClassVector v;
    v.n = n;
    for (int idx = 0; idx < table.size(); ++idx) {
        const int c = coeff(rng);
        if (c != 0) v.entries[table.at(idx)] = Rat(c);
    }
    return v;
}

}  // namespace

TEST_CASE("partition parsing and views") {
    const Partition mu = part("3,2,2");
    CHECK(mu.sum() == 7);
    CHECK(mu.count() == 3);
    CHECK(mu.degeneracy() == 4);
    CHECK(mu.aut() == 2);
    CHECK(mu.to_string() == "3,2,2");
    CHECK(part("1^2 3") == part("3,1,1"));
    CHECK(part("").empty());
    CHECK(part("2^3") == part("2,2,2"));
    CHECK(completed_class(part("2,1"), 4) == part("2,1,1"));
    CHECK_THROWS_AS(part("0,1"), atlas_error);
}

TEST_CASE("class sizes and enumeration agree") {
    for (int n = 1; n <= 6; ++n) {
        const PartitionTable table(n);
        for (int idx = 0; idx < table.size(); ++idx) {
            Int seen(0);
            for_each_in_class(n, table.at(idx), [&](const std::vector<int>& perm) {
                ++seen;
                // Every visited permutation has the requested type.
                CHECK(table.type_index(perm) == idx);
            });
            CHECK(seen == table.class_size(idx));
        }
    }
}

TEST_CASE("cut-and-join moves on the identity") {
    ClassVector v = delta_identity(3);
    v = cut_and_join(v);
    REQUIRE(v.entries.size() == 1);
    CHECK(v.entries.at(part("2,1")) == 3);

    v = cut_and_join(v);
    CHECK(v.entries.at(part("1,1,1")) == 3);
    CHECK(v.entries.at(part("3")) == 6);

    v = cut_and_join(cut_and_join(v));
    CHECK(v.entries.at(part("1,1,1")) == 27);
}

TEST_CASE("total transposition count per class") {
    for (int n = 2; n <= 8; ++n) {
        const PartitionTable table(n);
        const CutJoinMoves moves = cut_join_moves(table);
        for (int idx = 0; idx < table.size(); ++idx) {
            unsigned long total = 0;
            for (const auto& [target, count] : moves.per_class[static_cast<size_t>(idx)]) total += count;
            CHECK(total == static_cast<unsigned long>(n) * (n - 1) / 2);
        }
    }
}

TEST_CASE("cut-and-join is multiplication by the transposition class") {
    std::mt19937 rng(53);
    for (int n = 2; n <= 8; ++n) {
        const ClassVector v = random_vector(rng, n);
        const Partition transpositions = completed_class(part("2"), n);
        CHECK(cut_and_join(v).entries == class_multiply(v, transpositions).entries);
    }
}

TEST_CASE("class products commute and start from indicators") {
    const int n = 4;
    ClassVector delta = delta_identity(n);
    const ClassVector indicator = class_multiply(delta, part("2,1,1"));
    REQUIRE(indicator.entries.size() == 1);
    CHECK(indicator.entries.at(part("2,1,1")) == Rat(class_size(n, part("2,1,1"))));

    std::mt19937 rng(59);
    const ClassVector v = random_vector(rng, n);
    const auto lhs = class_multiply(class_multiply(v, part("2,1,1")), part("3,1"));
    const auto rhs = class_multiply(class_multiply(v, part("3,1")), part("2,1,1"));
    CHECK(lhs.entries == rhs.entries);
}

TEST_CASE("disconnected counts in small symmetric groups") {
    CHECK(disconnected_count({0, {}, 2}) == make_rat(1, 2));
    CHECK(disconnected_count({0, {}, 3}) == make_rat(9, 2));
    CHECK(disconnected_count({0, {part("1")}, 1}) == 1);
    CHECK(disconnected_count({1, {part("1")}, 1}) == 0);  // no transpositions on one sheet
}

TEST_CASE("connected counts in small symmetric groups") {
    CHECK(connected_counts(0, {}, 3)[3] == 4);
    CHECK(connected_counts(1, {part("1")}, 2)[2] == 1);
    CHECK(connected_counts(0, {}, 2)[2] == make_rat(1, 2));
}

TEST_CASE("oracle values") {
    CHECK(brute_force_oracle({0, {}, 3}) == 4);
    CHECK(brute_force_oracle({2, {}, 2}) == make_rat(1, 2));
    CHECK(brute_force_oracle({0, {part("3")}, 3}) == genus0_closed(3, part("3")));
    CHECK_THROWS_AS(brute_force_oracle({0, {}, 7}), guard_error);
}

TEST_CASE("genus-0 closed formula values") {
    CHECK(genus0_closed(1, {}) == 1);
    CHECK(genus0_closed(2, {}) == make_rat(1, 2));
    CHECK(genus0_closed(3, {}) == 4);
    CHECK(genus0_closed(1, part("2")) == 0);  // below p + r
}

TEST_CASE("dynamic programming equals the oracle") {
    // Unit-test slice of the acceptance sweep: n <= 4, k <= 2, parts <= 3.
    const std::vector<std::vector<Partition>> mu_lists = {
        {},        {part("2")},           {part("3")},           {part("2,1")},
        {part("1,1")}, {part("2,2")},     {part("2"), part("2")}, {part("2"), part("3")},
        {part("3,1")}, {part("1"), part("2,1")},
    };
    for (int n = 1; n <= 4; ++n) {
        for (const auto& mus : mu_lists) {
            int r = 0;
            bool fits = true;
            for (const auto& mu : mus) {
                r += mu.degeneracy();
                if (mu.sum() > n) fits = false;
            }
            if (!fits) continue;
            for (int genus = 0; genus <= 2; ++genus) {
                const int c = 2 * n + 2 * genus - 2 - r;
                if (c < 0 || c > 8) continue;
                const HurwitzQuery q{genus, mus, n};
                const auto table = connected_counts(genus, mus, n);
                INFO("n=", n, " genus=", genus);
                CHECK(table[static_cast<size_t>(n)] == brute_force_oracle(q));
            }
        }
    }
}

TEST_CASE("dynamic programming equals the genus-0 formula") {
    const std::vector<Partition> mus = {{},          part("1"),   part("2"),   part("1,1"), part("3"),
                                        part("2,1"), part("1,1,1"), part("2,2"), part("3,1")};
    for (const auto& mu : mus) {
        const auto counts = connected_counts(0, {mu}, 8);
        for (int n = 1; n <= 8; ++n) {
            INFO(mu.to_string(), " at n=", n);
            CHECK(counts[static_cast<size_t>(n)] == genus0_closed(n, mu));
        }
    }
}

TEST_CASE("table parity and the exponential structure") {
    // k = 0: the disconnected table is exactly the exponential of the
    // connected one.
    const auto [disc0, conn0] = hurwitz_tables({}, 5, 6);
    CHECK(bi_exp(conn0) == disc0);
    for (int n = 0; n <= 5; ++n)
        for (int t = 1; t <= 6; t += 2) CHECK(disc0.at(n, t) == 0);

    // k = 1 with a single 2-part: profiles sit in one component, so the
    // disconnected table factors through the empty-profile table.
    const auto [disc2, conn2] = hurwitz_tables({part("2")}, 5, 6);
    CHECK(disc2 == conn2 * disc0);
    for (int n = 0; n <= 5; ++n)
        for (int t = 0; t <= 6; t += 2) CHECK(disc2.at(n, t) == 0);  // r = 1 flips the parity
}

TEST_CASE("multi-part profiles distribute over components") {
    // mu = (2,2): two 2-cycles may land in different components, so the
    // connected table is the disconnected one with both the empty-profile
    // exponential and the split contribution removed.
    const auto [disc22, conn22] = hurwitz_tables({part("2,2")}, 6, 6);
    const auto [disc0, conn0] = hurwitz_tables({}, 6, 6);
    const auto [disc2, conn2] = hurwitz_tables({part("2")}, 6, 6);
    const BiSeries half = scale(conn2 * conn2, make_rat(1, 2));
    CHECK(disc22 == (conn22 + half) * disc0);
}

TEST_CASE("series of covering counts") {
    const PowerSeries empty0 = h_series(0, {}, 10);
    for (int n = 1; n <= 10; ++n)
        CHECK(empty0[n] == rat_pow(Rat(n), n - 3) / Rat(factorial(static_cast<unsigned long>(n))));

    const PowerSeries one1 = h_series(1, {part("1")}, 10);
    for (int n = 1; n <= 10; ++n)
        CHECK(one1[n] == make_rat(a_number(n), Int(24) * factorial(static_cast<unsigned long>(n))));

    const PowerSeries empty1 = h_series(1, {}, 10);
    for (int n = 1; n <= 10; ++n)
        CHECK(empty1[n] == make_rat(a_number(n), Int(24) * Int(n) * factorial(static_cast<unsigned long>(n))));
}

TEST_CASE("membership fits at desk scale") {
    const auto b0 = fit_and_b(0, {}, 16, 4, 6);
    REQUIRE(std::holds_alternative<GravityFit>(b0));
    const GravityFit& fit0 = std::get<GravityFit>(b0);
    CHECK(fit0.leading.alpha == make_rat(-7, 2));
    CHECK(fit0.leading.c_gauss == 1);
    CHECK(fit0.leading.c_plain == 0);

    const auto b1 = fit_and_b(1, {part("1")}, 16, 4, 6);
    REQUIRE(std::holds_alternative<GravityFit>(b1));
    const GravityFit& fit1 = std::get<GravityFit>(b1);
    CHECK(fit1.leading.alpha == 0);
    CHECK(fit1.leading.c_plain == make_rat(1, 48));
    CHECK(fit1.leading.c_gauss == 0);

    const auto bad = fit_and_b(1, {}, 16, 4, 6);
    REQUIRE(std::holds_alternative<FitFailure>(bad));
    CHECK(std::get<FitFailure>(bad).mismatch_index.has_value());
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(connected_counts(0, {}, 31), guard_error);
}
