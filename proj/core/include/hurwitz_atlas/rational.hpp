#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hurwitz_atlas {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals
// from GMP. mpq_class keeps denominators positive and fractions reduced as
// long as every value enters through a canonicalizing constructor, which is
// what make_rat and parse_rat guarantee.
using Int = mpz_class;
using Rat = mpq_class;

class atlas_error : public std::runtime_error {
public:
    atlas_error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class guard_error : public atlas_error {
public:
    explicit guard_error(const std::string& message) : atlas_error("guard", message) {}
};

// True when HURWITZ_ATLAS_GUARD_OVERRIDE is set to a non-empty value other
// than "0". Guards exist to keep desk runs bounded; lifting them is unsafe
// for runtime, not for correctness.
bool guards_overridden();

void require_guard(bool ok, const std::string& message);

Rat make_rat(Int num, Int den);

Int parse_int(const std::string& text);

// Accepts "num" or "num/den".
Rat parse_rat(const std::string& text);

// "num/den", or just "num" when the denominator is 1.
std::string rat_to_string(const Rat& value);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);
Int int_pow(const Int& base, unsigned long exp);

// base^exp for possibly negative exp; base must be nonzero when exp < 0.
Rat rat_pow(const Rat& base, long exp);

}  // namespace hurwitz_atlas
