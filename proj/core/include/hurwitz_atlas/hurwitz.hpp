#pragma once

#include <variant>
#include <vector>

#include "hurwitz_atlas/algebra_a.hpp"
#include "hurwitz_atlas/partitions.hpp"
#include "hurwitz_atlas/power_series.hpp"
#include "hurwitz_atlas/rational.hpp"

namespace hurwitz_atlas {

// Count of n-sheeted marked coverings of the sphere with branch types
// mus plus c(n) = 2n + 2g - 2 - r simple branch points.
struct HurwitzQuery {
    int genus = 0;
    std::vector<Partition> mus;
    int n = 0;

    int total_degeneracy() const;
    int simple_point_count() const;  // c(n); negative means no covering
};

// Weighted count of possibly disconnected coverings: tuple count over the
// symmetric group divided by n!, times the marking factors choosing the
// marked simple preimages.
Rat disconnected_count(const HurwitzQuery& q);

// Connected counts h_{g,n;mus} for n = 0..max_n (entry 0 unused). The
// disconnected tables are assembled into series in (q, u), u marking the
// simple branch points; the connected part is the formal logarithm. For
// nonempty profiles the parts of each mu distribute over the components, so
// the logarithm is taken in the algebra of profile-decorated bi-series; its
// profile-free component is the plain bivariate logarithm.
std::vector<Rat> connected_counts(int genus, const std::vector<Partition>& mus, int max_n);

// The full disconnected and connected tables on the (n, t) rectangle, t
// counting simple branch points; provides the raw material behind
// connected_counts for consistency checks.
std::pair<BiSeries, BiSeries> hurwitz_tables(const std::vector<Partition>& mus, int max_n, int max_t);

// Direct enumeration over permutation tuples with a transitivity check.
// Guard: n <= 6 and c(n) <= 10.
Rat brute_force_oracle(const HurwitzQuery& q);

// (2n-2-r)!/|Aut(mu)| * prod b_i^{b_i}/b_i! * n^{n-r-3}/(n-p-r)!; zero when
// n < p + r.
Rat genus0_closed(int n, const Partition& mu);

// sum_n h_{g,n;mus}/c(n)! q^n.
PowerSeries h_series(int genus, const std::vector<Partition>& mus, int order);

struct GravityFit {
    AElement element;
    int window = 0;
    AsymptoticTerm leading;
};

// Fits h_series into the algebra, escalating the window up to window_cap,
// and extracts the exact leading asymptotics of the coefficients.
std::variant<GravityFit, FitFailure> fit_and_b(int genus, const std::vector<Partition>& mus, int order,
                                               int window_cap, int holdout = 8);

}  // namespace hurwitz_atlas
