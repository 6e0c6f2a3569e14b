#include "hurwitz_atlas/algebra_a.hpp"

#include <algorithm>

namespace hurwitz_atlas {

void laurent_add(LaurentMap& dest, int exponent, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = dest.find(exponent);
    if (it == dest.end()) {
        dest.emplace(exponent, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) dest.erase(it);
}

Rat laurent_eval(const LaurentMap& p, const Rat& x) {
    Rat total(0);
    for (const auto& [e, c] : p) total += c * rat_pow(x, e);
    return total;
}

int laurent_degree(const LaurentMap& p) {
    if (p.empty()) throw atlas_error("bad_input", "degree of the zero polynomial");
    return p.rbegin()->first;
}

Rat laurent_lead(const LaurentMap& p) {
    if (p.empty()) throw atlas_error("bad_input", "leading coefficient of the zero polynomial");
    return p.rbegin()->second;
}

AElement::AElement(LaurentMap terms) {
    for (auto& [e, c] : terms)
        if (c != 0) terms_.emplace(e, c);
}

AElement AElement::constant(const Rat& c) { return monomial(0, c); }

AElement AElement::monomial(int exponent, const Rat& coeff) {
    AElement a;
    if (coeff != 0) a.terms_.emplace(exponent, coeff);
    return a;
}

AElement AElement::y() {
    // Y = 1 - X
    return constant(Rat(1)) - x();
}

AElement AElement::z() {
    // Z = X^{-1} - 1
    return monomial(-1, Rat(1)) - constant(Rat(1));
}

Rat AElement::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rat(0) : it->second;
}

AElement operator+(const AElement& a, const AElement& b) {
    LaurentMap out = a.terms();
    for (const auto& [e, c] : b.terms()) laurent_add(out, e, c);
    return AElement(std::move(out));
}

AElement operator-(const AElement& a, const AElement& b) {
    LaurentMap out = a.terms();
    for (const auto& [e, c] : b.terms()) laurent_add(out, e, -c);
    return AElement(std::move(out));
}

AElement operator*(const AElement& a, const AElement& b) {
    LaurentMap out;
    for (const auto& [e1, c1] : a.terms())
        for (const auto& [e2, c2] : b.terms()) laurent_add(out, e1 + e2, c1 * c2);
    return AElement(std::move(out));
}

AElement scale(const AElement& a, const Rat& c) {
    LaurentMap out;
    for (const auto& [e, v] : a.terms()) laurent_add(out, e, v * c);
    return AElement(std::move(out));
}

AElement pow(const AElement& a, int k) {
    if (a.terms().size() == 1) {
        const auto& [e, c] = *a.terms().begin();
        return AElement::monomial(e * k, rat_pow(c, k));
    }
    if (k < 0) throw atlas_error("bad_input", "negative power of a non-monomial element");
    AElement result = AElement::constant(Rat(1));
    for (int i = 0; i < k; ++i) result = result * a;
    return result;
}

AElement from_yz_poly(const YZPoly& poly) {
    AElement result;
    const AElement y = AElement::y();
    const AElement z = AElement::z();
    for (const auto& [degs, c] : poly) {
        if (c == 0) continue;
        AElement term = AElement::constant(c);
        term = term * pow(y, degs.first);
        term = term * pow(z, degs.second);
        result = result + term;
    }
    return result;
}

PowerSeries to_series(const AElement& a, int order) {
    PowerSeries result(order);
    if (a.is_zero()) return result;
    const PowerSeries one_minus_y = PowerSeries::constant(Rat(1), order) - gen_y(order);
    const PowerSeries one_plus_z = PowerSeries::constant(Rat(1), order) + gen_z(order);
    const int kmin = a.terms().begin()->first;
    const int kmax = a.terms().rbegin()->first;
    // Walk the exponent range once, multiplying by X or X^{-1} = 1+Z as we go.
    PowerSeries x_power = kmin >= 0 ? pow(one_minus_y, kmin) : pow(one_plus_z, -kmin);
    for (int k = kmin; k <= kmax; ++k) {
        const Rat c = a.coeff(k);
        if (c != 0) result = result + scale(x_power, c);
        if (k < kmax) x_power = x_power * one_minus_y;
    }
    return result;
}

namespace {

// Solves the dense square system in place; returns false when singular.
bool solve_exact(std::vector<std::vector<Rat>>& m, std::vector<Rat>& rhs, std::vector<Rat>& out) {
    const size_t dim = rhs.size();
    for (size_t col = 0; col < dim; ++col) {
        size_t pivot = col;
        while (pivot < dim && m[pivot][col] == 0) ++pivot;
        if (pivot == dim) return false;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        const Rat inv = 1 / m[col][col];
        for (size_t j = col; j < dim; ++j) m[col][j] *= inv;
        rhs[col] *= inv;
        for (size_t row = 0; row < dim; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rat f = m[row][col];
            for (size_t j = col; j < dim; ++j) m[row][j] -= f * m[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    out = rhs;
    return true;
}

}  // namespace

FitResult fit(const PowerSeries& coeffs, int window, int holdout) {
    if (window < 0 || holdout < 0) throw atlas_error("bad_input", "fit: negative window or holdout");
    const int needed = 2 * window + holdout;
    if (coeffs.order() < needed)
        throw atlas_error("bad_input", "fit: series order too small for window and holdout");

    const int dim = 2 * window + 1;
    const int basis_order = 2 * window + holdout;
    const PowerSeries one_minus_y = PowerSeries::constant(Rat(1), basis_order) - gen_y(basis_order);
    const PowerSeries one_plus_z = PowerSeries::constant(Rat(1), basis_order) + gen_z(basis_order);

    std::vector<PowerSeries> basis;
    basis.reserve(dim);
    PowerSeries x_power = pow(one_plus_z, window);  // X^{-window}
    for (int k = -window; k <= window; ++k) {
        basis.push_back(x_power);
        if (k < window) x_power = x_power * one_minus_y;
    }

    std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim));
    std::vector<Rat> rhs(dim);
    for (int i = 0; i < dim; ++i) {
        for (int col = 0; col < dim; ++col) m[i][col] = basis[col][i];
        rhs[i] = coeffs[i];
    }
    std::vector<Rat> solution;
    if (!solve_exact(m, rhs, solution)) return FitFailure{"rank deficient", std::nullopt};

    for (int i = dim; i <= basis_order; ++i) {
        Rat predicted(0);
        for (int col = 0; col < dim; ++col)
            if (solution[col] != 0) predicted += solution[col] * basis[col][i];
        if (predicted != coeffs[i]) return FitFailure{"holdout mismatch", i};
    }

    LaurentMap terms;
    for (int col = 0; col < dim; ++col) laurent_add(terms, col - window, solution[col]);
    return AElement(std::move(terms));
}

bool fit_succeeded(const FitResult& r) { return std::holds_alternative<AElement>(r); }

std::vector<Rat> d_series_as_z_polynomial(int m, bool squared) {
    std::vector<Rat> poly(squared ? 3 : 2, Rat(0));
    poly.back() = Rat(1);  // Z or Z^2
    for (int step = 0; step < m; ++step) {
        // D(Z^j) = j Z^j (1+Z)^2 = j (Z^j + 2 Z^{j+1} + Z^{j+2})
        std::vector<Rat> next(poly.size() + 2, Rat(0));
        for (size_t j = 1; j < poly.size(); ++j) {
            if (poly[j] == 0) continue;
            const Rat base = poly[j] * Rat(static_cast<long>(j));
            next[j] += base;
            next[j + 1] += 2 * base;
            next[j + 2] += base;
        }
        poly = std::move(next);
    }
    return poly;
}

std::vector<DSeriesTerm> z_power_decompose(int k) {
    if (k < 1) throw atlas_error("bad_input", "z_power_decompose needs k >= 1");

    // The list Z, Z^2, DZ, D(Z^2), ... ordered by degree as polynomials in Z:
    // degree d odd is D^{(d-1)/2} Z, degree d even is D^{(d-2)/2}(Z^2).
    std::vector<std::vector<Rat>> items(static_cast<size_t>(k) + 1);
    for (int d = 1; d <= k; ++d) {
        const bool squared = d % 2 == 0;
        const int m = squared ? (d - 2) / 2 : (d - 1) / 2;
        items[d] = d_series_as_z_polynomial(m, squared);
    }

    std::vector<Rat> target(static_cast<size_t>(k) + 1, Rat(0));
    target[k] = Rat(1);

    std::vector<DSeriesTerm> result;
    for (int d = k; d >= 1; --d) {
        if (target[d] == 0) continue;
        const Rat c = target[d] / items[d][d];
        for (size_t j = 0; j < items[d].size(); ++j) target[j] -= c * items[d][j];
        const bool squared = d % 2 == 0;
        result.push_back(DSeriesTerm{squared ? (d - 2) / 2 : (d - 1) / 2, squared, c});
    }
    for (int j = 0; j <= k; ++j)
        if (target[j] != 0) throw atlas_error("internal", "z power decomposition did not close");
    std::reverse(result.begin(), result.end());
    return result;
}

namespace {

// Coefficients of (n-1)(n-2)...(n-j+1) as a polynomial in n.
std::vector<Rat> falling_factorial_poly(int j) {
    std::vector<Rat> poly{Rat(1)};
    for (int i = 1; i <= j - 1; ++i) {
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] += poly[d];
            next[d] -= Rat(i) * poly[d];
        }
        poly = std::move(next);
    }
    return poly;
}

}  // namespace

ClosedForm closed_form(const AElement& a) {
    ClosedForm cf;
    Rat at_zero(0);
    for (const auto& [k, c] : a.terms()) {
        at_zero += c;  // every X^k has constant term 1
        if (k > 0) {
            // X^k = sum_j binom(k,j) (-Y)^j; the coefficient of q^n in Y^j is
            // j (n-1)...(n-j+1) n^{n-j}/n! for n >= 1, which self-corrects to
            // zero below n = j.
            for (int j = 1; j <= k; ++j) {
                Rat w = c * Rat(binomial(k, j));
                if (j % 2 == 1) w = -w;
                const auto ff = falling_factorial_poly(j);
                for (size_t d = 0; d < ff.size(); ++d)
                    laurent_add(cf.p, static_cast<int>(d) - j, w * Rat(j) * ff[d]);
            }
        } else if (k < 0) {
            // X^{-e} = (1+Z)^e; route each Z^i through the D-series basis.
            const int e = -k;
            for (int i = 1; i <= e; ++i) {
                const Rat w = c * Rat(binomial(e, i));
                for (const auto& term : z_power_decompose(i))
                    laurent_add(term.squared ? cf.q : cf.p, term.d_power, w * term.coeff);
            }
        }
    }
    cf.n0 = 1;
    cf.exceptions.emplace_back(0, at_zero);
    return cf;
}

Rat ClosedForm::value_at(int n) const {
    for (const auto& [idx, v] : exceptions)
        if (idx == n) return v;
    if (n < n0) throw atlas_error("bad_input", "closed form queried below n0 without an exception entry");
    Rat total(0);
    if (!p.empty())
        total += laurent_eval(p, Rat(n)) * make_rat(int_pow(Int(n), static_cast<unsigned long>(n)), factorial(n));
    if (!q.empty()) total += laurent_eval(q, Rat(n)) * make_rat(a_number(n), factorial(n));
    return total;
}

AsymptoticTerm leading_asymptotic(const AElement& a) {
    if (a.is_zero()) throw atlas_error("bad_input", "asymptotics of the zero element");
    const ClosedForm cf = closed_form(a);
    AsymptoticTerm term{Rat(0), Rat(0), Rat(0)};
    if (cf.p.empty() && cf.q.empty()) return term;  // constants: coefficients are eventually zero

    // n^n/n! ~ e^n/sqrt(2 pi n) contributes a half-integer exponent,
    // A_n/n! ~ e^n/2 an integer one, so the two candidates never tie.
    bool have = false;
    Rat alpha;
    if (!cf.p.empty()) {
        alpha = Rat(laurent_degree(cf.p)) - make_rat(1, 2);
        term = AsymptoticTerm{alpha, laurent_lead(cf.p), Rat(0)};
        have = true;
    }
    if (!cf.q.empty()) {
        const Rat alpha_q(laurent_degree(cf.q));
        if (!have || alpha_q > alpha)
            term = AsymptoticTerm{alpha_q, Rat(0), laurent_lead(cf.q) / 2};
    }
    return term;
}

std::string asymptotic_constant_decimal(const AsymptoticTerm& term, int digits) {
    const int prec_bits = 64 + digits * 4;
    mpf_class pi(
        "3.141592653589793238462643383279502884197169399375105820974944592307816406286208998628034825342117"
        "0679821480865132823066470938446",
        prec_bits);
    mpf_class two_pi = 2 * pi;
    mpf_class value(0, prec_bits);
    if (term.c_gauss != 0) value += mpf_class(Rat(term.c_gauss), prec_bits) / sqrt(two_pi);
    if (term.c_plain != 0) value += mpf_class(Rat(term.c_plain), prec_bits);

    mp_exp_t exp10 = 0;
    std::string mantissa = value.get_str(exp10, 10, static_cast<size_t>(digits));
    if (mantissa.empty() || mantissa == "-") return "0";
    bool neg = false;
    if (mantissa[0] == '-') {
        neg = true;
        mantissa.erase(0, 1);
    }
    if (mantissa.empty()) return "0";
    std::string out;
    if (exp10 <= 0) {
        out = "0." + std::string(static_cast<size_t>(-exp10), '0') + mantissa;
    } else if (static_cast<size_t>(exp10) >= mantissa.size()) {
        out = mantissa + std::string(static_cast<size_t>(exp10) - mantissa.size(), '0');
    } else {
        out = mantissa.substr(0, static_cast<size_t>(exp10)) + "." + mantissa.substr(static_cast<size_t>(exp10));
    }
    return neg ? "-" + out : out;
}

}  // namespace hurwitz_atlas
