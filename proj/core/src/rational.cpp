#include "hurwitz_atlas/rational.hpp"

#include <cstdlib>

namespace hurwitz_atlas {

bool guards_overridden() {
    static const bool value = [] {
        const char* env = std::getenv("HURWITZ_ATLAS_GUARD_OVERRIDE");
        return env != nullptr && env[0] != '\0' && std::string(env) != "0";
    }();
    return value;
}

void require_guard(bool ok, const std::string& message) {
    if (!ok && !guards_overridden()) throw guard_error(message);
}

Rat make_rat(Int num, Int den) {
    if (den == 0) throw atlas_error("bad_input", "rational with zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

Int parse_int(const std::string& text) {
    try {
        return Int(text);
    } catch (const std::invalid_argument&) {
        throw atlas_error("bad_input", "not an integer: '" + text + "'");
    }
}

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    return make_rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string rat_to_string(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
        mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
        return r;  // powers of a canonical fraction stay canonical
    }
    if (base == 0) throw atlas_error("bad_input", "negative power of zero");
    Rat inv = 1 / base;
    return rat_pow(inv, -exp);
}

}  // namespace hurwitz_atlas
