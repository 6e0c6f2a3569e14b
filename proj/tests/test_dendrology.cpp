#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "hurwitz_atlas/algebra_a.hpp"
#include "hurwitz_atlas/dendrology.hpp"

using namespace hurwitz_atlas;

TEST_CASE("tree counts match Cayley's formula") {
    CHECK(count_trees(1) == 1);
    CHECK(count_trees(2) == 1);
    CHECK(count_trees(3) == 3);
    CHECK(count_trees(4) == 16);
    CHECK(count_trees(7) == 16807);
}

TEST_CASE("enumerated trees are distinct spanning trees") {
    std::set<std::vector<std::pair<int, int>>> seen;
    for_each_tree(5, [&](const LabeledTree& tree) {
        REQUIRE(tree.edges.size() == 4);
        // Connectivity via union of the edges.
        std::vector<int> root(6);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int x) {
            while (root[static_cast<size_t>(x)] != x) x = root[static_cast<size_t>(x)];
            return x;
        };
        std::vector<std::pair<int, int>> normalized;
        for (auto [a, b] : tree.edges) {
            CHECK(a != b);
            root[static_cast<size_t>(find(a))] = find(b);
            normalized.emplace_back(std::min(a, b), std::max(a, b));
        }
        int components = 0;
        for (int v = 1; v <= 5; ++v)
            if (find(v) == v) ++components;
        CHECK(components == 1);
        std::sort(normalized.begin(), normalized.end());
        CHECK(seen.insert(normalized).second);
    });
    CHECK(seen.size() == 125);
}

TEST_CASE("guard on the enumeration size") {
    CHECK_THROWS_AS(count_trees(10), guard_error);
    CHECK_THROWS_AS(path_moments(9, 1, MomentKind::m), guard_error);
}

TEST_CASE("first moments") {
    CHECK(path_moments(2, 1, MomentKind::m) == 2);
    CHECK(path_moments(2, 1, MomentKind::p) == 2);
    CHECK(path_moments(3, 1, MomentKind::p) == 24);

    // m_{4,2} by an independent hand count over the 16 trees: every tree on
    // 4 vertices is a path (12 of them, distance profile 3x1, 2x2, 1x3) or
    // a star (4, profile 3x1, 3x2), ordered pairs double each.
    const Rat paths = Rat(12) * Rat(2 * (3 * 1 + 2 * 4 + 1 * 9));
    const Rat stars = Rat(4) * Rat(2 * (3 * 1 + 3 * 4));
    CHECK(path_moments(4, 2, MomentKind::m) == paths + stars);
}

TEST_CASE("total height equals A_n") {
    for (int n = 2; n <= 8; ++n) {
        const Rat a_n = Rat(a_number(n));
        CHECK(path_moments(n, 1, MomentKind::m) == a_n);
        CHECK(path_moments(n, 1, MomentKind::p) == a_n);
    }
}

TEST_CASE("binomial moments match powers of Z") {
    for (int k = 1; k <= 3; ++k) {
        const PowerSeries zk = pow(gen_z(8), k + 1);
        for (int n = 2; n <= 8; ++n) {
            const Rat expected = zk[n] * Rat(factorial(static_cast<unsigned long>(n)));
            CHECK(path_moments(n, k, MomentKind::p) == expected);
        }
    }
}

TEST_CASE("moment series live in the algebra") {
    // l^2 = 2 binom(l,2) + binom(l,1) and l^3 = 6 binom(l,3) + 6 binom(l,2)
    // + binom(l,1) turn the p-series Z^{k+1} into m-series elements.
    PowerSeries m2(8), m3(8);
    for (int n = 1; n <= 8; ++n) {
        const Rat norm(factorial(static_cast<unsigned long>(n)));
        if (n >= 2) {
            m2.set(n, path_moments(n, 2, MomentKind::m) / norm);
            m3.set(n, path_moments(n, 3, MomentKind::m) / norm);
        }
    }

    const AElement expected_m2 = from_yz_poly({{{0, 3}, Rat(2)}, {{0, 2}, Rat(1)}});
    const AElement expected_m3 = from_yz_poly({{{0, 4}, Rat(6)}, {{0, 3}, Rat(6)}, {{0, 2}, Rat(1)}});
    CHECK(to_series(expected_m2, 8) == m2);
    CHECK(to_series(expected_m3, 8) == m3);

    // Only 9 coefficients exist under the guard, so the k=2 fit keeps a
    // 2-term holdout and the k=3 fit spends everything on the window.
    const FitResult fit2 = fit(m2, 3, 2);
    REQUIRE(fit_succeeded(fit2));
    CHECK(std::get<AElement>(fit2) == expected_m2);
    const FitResult fit3 = fit(m3, 4, 0);
    REQUIRE(fit_succeeded(fit3));
    CHECK(std::get<AElement>(fit3) == expected_m3);
}
