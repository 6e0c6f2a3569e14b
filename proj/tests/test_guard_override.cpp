#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "hurwitz_atlas/multigraph.hpp"

using namespace hurwitz_atlas;

// HURWITZ_ATLAS_GUARD_OVERRIDE lifts the enumeration guards. The flag is
// read once per process, so this lives in its own binary and sets the
// variable before anything else touches a guard.
TEST_CASE("the override env var lifts enumeration guards") {
    setenv("HURWITZ_ATLAS_GUARD_OVERRIDE", "1", 1);

    // Ten half-edges: over the 8-half-edge guard of the literal search.
    const MultiGraph g({star_vertex(), anon_vertex()},
                       {{0, 1}, {0, 1}, {1, 1}, {1, 1}, {0, 0}});
    CHECK(automorphism_count_half_edge_search(g) == automorphism_count(g));
}
