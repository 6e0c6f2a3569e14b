#pragma once

#include <functional>
#include <vector>

#include "hurwitz_atlas/rational.hpp"

namespace hurwitz_atlas {

// A monomial tau_{d_1} ... tau_{d_n}: the multiset of indices, ascending.
using Monomial = std::vector<int>;

// Visits every ascending vector of `size` nonnegative entries with the given
// sum.
void for_each_monomial(int size, int total, const std::function<void(const Monomial&)>& visit);

// Number of ordered tuples realizing the multiset: n! / prod(multiplicities!).
Int monomial_multiplicity(const Monomial& m);

}  // namespace hurwitz_atlas
