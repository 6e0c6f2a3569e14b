#include "hurwitz_atlas/monomials.hpp"

namespace hurwitz_atlas {

namespace {

void recurse(Monomial& current, int remaining_slots, int remaining_total, int minimum,
             const std::function<void(const Monomial&)>& visit) {
    if (remaining_slots == 0) {
        if (remaining_total == 0) visit(current);
        return;
    }
    if (remaining_total < 0) return;
    // Entries are ascending, so the remaining slots all take at least d.
    for (int d = minimum; d * remaining_slots <= remaining_total; ++d) {
        current.push_back(d);
        recurse(current, remaining_slots - 1, remaining_total - d, d, visit);
        current.pop_back();
    }
}

}  // namespace

void for_each_monomial(int size, int total, const std::function<void(const Monomial&)>& visit) {
    if (size < 0 || total < 0) return;
    Monomial current;
    current.reserve(static_cast<size_t>(size));
    recurse(current, size, total, 0, visit);
}

Int monomial_multiplicity(const Monomial& m) {
    Int result = factorial(static_cast<unsigned long>(m.size()));
    size_t i = 0;
    while (i < m.size()) {
        size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        Int run_fact = factorial(static_cast<unsigned long>(j - i));
        Int q;
        mpz_divexact(q.get_mpz_t(), result.get_mpz_t(), run_fact.get_mpz_t());
        result = q;
        i = j;
    }
    return result;
}

}  // namespace hurwitz_atlas
