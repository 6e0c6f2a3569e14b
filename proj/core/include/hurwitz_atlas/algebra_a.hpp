#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hurwitz_atlas/power_series.hpp"
#include "hurwitz_atlas/rational.hpp"

namespace hurwitz_atlas {

// Laurent polynomial with Rat coefficients, stored sparsely without zeros.
// Used both for elements of the series algebra (exponent = power of X) and
// for the per-coefficient closed forms (exponent = power of n).
using LaurentMap = std::map<int, Rat>;

void laurent_add(LaurentMap& dest, int exponent, const Rat& coeff);
Rat laurent_eval(const LaurentMap& p, const Rat& x);
int laurent_degree(const LaurentMap& p);  // max exponent; p must be nonempty
Rat laurent_lead(const LaurentMap& p);

// An element of the algebra generated by the tree series Y and Z, in the
// canonical coordinate X = 1 - Y. Since (1-Y)(1+Z) = 1, the algebra is the
// ring of Laurent polynomials in X: Y = 1 - X and Z = X^{-1} - 1.
class AElement {
public:
    AElement() = default;
    explicit AElement(LaurentMap terms);

    static AElement zero() { return AElement(); }
    static AElement constant(const Rat& c);
    static AElement monomial(int exponent, const Rat& coeff);
    static AElement x() { return monomial(1, Rat(1)); }
    static AElement y();
    static AElement z();

    const LaurentMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(int exponent) const;

    bool operator==(const AElement& other) const = default;

private:
    LaurentMap terms_;
};

AElement operator+(const AElement& a, const AElement& b);
AElement operator-(const AElement& a, const AElement& b);
AElement operator*(const AElement& a, const AElement& b);
AElement scale(const AElement& a, const Rat& c);
AElement pow(const AElement& a, int k);  // any integer k: X is invertible, general elements need k >= 0

// Bivariate polynomial in the symbols Y and Z; key = (degree in Y, degree in Z).
using YZPoly = std::map<std::pair<int, int>, Rat>;

// Substitutes Y = 1 - X, Z = X^{-1} - 1 and normalizes.
AElement from_yz_poly(const YZPoly& poly);

// Exact truncation of the element's power series: nonnegative powers of X
// expand through Y, negative ones through 1 + Z.
PowerSeries to_series(const AElement& a, int order);

struct FitFailure {
    std::string reason;
    std::optional<int> mismatch_index;  // first holdout index that disagrees
};

using FitResult = std::variant<AElement, FitFailure>;

// Solves for an element with X-exponents in [-window, window] matching the
// first 2*window+1 coefficients exactly, then validates the next `holdout`
// coefficients. The series must carry at least 2*window+1+holdout+... terms,
// i.e. order >= 2*window + holdout.
FitResult fit(const PowerSeries& coeffs, int window, int holdout);

bool fit_succeeded(const FitResult& r);

// Combination expressing Z^k in the first k series of the list
// Z, Z^2, DZ, D(Z^2), D^2 Z, D^2(Z^2), ... The coefficients are integral
// through k = 3; from k = 4 on they pick up denominators, because the
// leading coefficients of the D-series exceed 1 (D(Z^2) opens with 2 Z^4).
struct DSeriesTerm {
    int d_power;   // number of D applications
    bool squared;  // false: D^m Z, true: D^m(Z^2)
    Rat coeff;
};

std::vector<DSeriesTerm> z_power_decompose(int k);

// D^m Z (or D^m(Z^2)) written as a polynomial in Z, by iterating
// DZ = Z(1+Z)^2. Index = power of Z.
std::vector<Rat> d_series_as_z_polynomial(int m, bool squared);

// Exact per-coefficient description: for n >= n0 the coefficient of q^n
// equals P(n) n^n/n! + Q(n) A_n/n!, with the finitely many earlier
// coefficients listed verbatim.
struct ClosedForm {
    LaurentMap p;
    LaurentMap q;
    int n0 = 1;
    std::vector<std::pair<int, Rat>> exceptions;

    Rat value_at(int n) const;
};

ClosedForm closed_form(const AElement& a);

// Leading coefficient growth c * e^n * n^alpha with
// c = c_gauss / sqrt(2*pi) + c_plain; at most one part is nonzero.
struct AsymptoticTerm {
    Rat alpha;
    Rat c_gauss;
    Rat c_plain;

    bool operator==(const AsymptoticTerm& other) const = default;
};

AsymptoticTerm leading_asymptotic(const AElement& a);

// 50-digit decimal rendering of c_gauss/sqrt(2 pi) + c_plain, for reports.
std::string asymptotic_constant_decimal(const AsymptoticTerm& term, int digits = 50);

}  // namespace hurwitz_atlas
