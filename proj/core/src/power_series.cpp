#include "hurwitz_atlas/power_series.hpp"

#include <algorithm>

namespace hurwitz_atlas {

PowerSeries::PowerSeries(int order, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<size_t>(order) + 1)
        throw atlas_error("bad_input", "coefficient count does not match series order");
}

PowerSeries PowerSeries::constant(const Rat& value, int order) {
    PowerSeries s(order);
    s.set(0, value);
    return s;
}

PowerSeries PowerSeries::truncated(int order) const {
    PowerSeries s(order);
    for (int n = 0; n <= std::min(order, this->order()); ++n) s.set(n, coeffs_[n]);
    return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    PowerSeries s(order);
    for (int n = 0; n <= order; ++n) s.set(n, a[n] + b[n]);
    return s;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    PowerSeries s(order);
    for (int n = 0; n <= order; ++n) s.set(n, a[n] - b[n]);
    return s;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    PowerSeries s(order);
    for (int i = 0; i <= order; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b[j] == 0) continue;
            s.set(i + j, s[i + j] + a[i] * b[j]);
        }
    }
    return s;
}

PowerSeries scale(const PowerSeries& a, const Rat& c) {
    PowerSeries s(a.order());
    for (int n = 0; n <= a.order(); ++n) s.set(n, a[n] * c);
    return s;
}

PowerSeries inverse(const PowerSeries& a) {
    if (a[0] == 0) throw atlas_error("bad_input", "inverse of a series with zero constant term");
    PowerSeries b(a.order());
    const Rat lead = 1 / a[0];
    b.set(0, lead);
    for (int n = 1; n <= a.order(); ++n) {
        Rat acc(0);
        for (int j = 1; j <= n; ++j) acc += a[j] * b[n - j];
        b.set(n, -lead * acc);
    }
    return b;
}

PowerSeries pow(const PowerSeries& a, long k) {
    if (k < 0) return pow(inverse(a), -k);
    PowerSeries result = PowerSeries::constant(Rat(1), a.order());
    PowerSeries base = a;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

PowerSeries d_operator(const PowerSeries& a) {
    PowerSeries s(a.order());
    for (int n = 1; n <= a.order(); ++n) s.set(n, a[n] * n);
    return s;
}

PowerSeries series_exp(const PowerSeries& a) {
    if (a[0] != 0) throw atlas_error("bad_input", "exp: nonzero constant term");
    PowerSeries e(a.order());
    e.set(0, Rat(1));
    // e' = a' e, coefficientwise: n e_n = sum_{j=1..n} j a_j e_{n-j}
    for (int n = 1; n <= a.order(); ++n) {
        Rat acc(0);
        for (int j = 1; j <= n; ++j) acc += Rat(j) * a[j] * e[n - j];
        e.set(n, acc / n);
    }
    return e;
}

PowerSeries series_log(const PowerSeries& a) {
    if (a[0] != 1) throw atlas_error("bad_input", "log: constant term != 1");
    PowerSeries g(a.order());
    // a g' = a': n g_n = n a_n - sum_{j=1..n-1} a_j (n-j) g_{n-j}
    for (int n = 1; n <= a.order(); ++n) {
        Rat acc = Rat(n) * a[n];
        for (int j = 1; j < n; ++j) acc -= a[j] * Rat(n - j) * g[n - j];
        g.set(n, acc / n);
    }
    return g;
}

PowerSeries gen_y(int order) {
    PowerSeries s(order);
    for (int n = 1; n <= order; ++n)
        s.set(n, make_rat(int_pow(Int(n), static_cast<unsigned long>(n - 1)), factorial(n)));
    return s;
}

PowerSeries gen_z(int order) {
    PowerSeries s(order);
    for (int n = 1; n <= order; ++n)
        s.set(n, make_rat(int_pow(Int(n), static_cast<unsigned long>(n)), factorial(n)));
    return s;
}

Int a_number(int n) {
    if (n < 1) throw atlas_error("bad_input", "A_n is defined for n >= 1");
    Int total(0);
    const Int n_fact = factorial(n);
    for (int k = 0; k <= n - 2; ++k) {
        Int term;
        mpz_divexact(term.get_mpz_t(), n_fact.get_mpz_t(), factorial(k).get_mpz_t());
        total += term * int_pow(Int(n), static_cast<unsigned long>(k));
    }
    return total;
}

PowerSeries gen_a_sequence(int order) {
    PowerSeries s(order);
    for (int n = 1; n <= order; ++n) s.set(n, make_rat(a_number(n), factorial(n)));
    return s;
}

PowerSeries BiSeries::u_slice(int t) const {
    PowerSeries s(nq_);
    for (int n = 0; n <= nq_; ++n) s.set(n, at(n, t));
    return s;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    const int nq = std::min(a.order_q(), b.order_q());
    const int nu = std::min(a.order_u(), b.order_u());
    BiSeries s(nq, nu);
    for (int n = 0; n <= nq; ++n)
        for (int t = 0; t <= nu; ++t) s.set(n, t, a.at(n, t) + b.at(n, t));
    return s;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    const int nq = std::min(a.order_q(), b.order_q());
    const int nu = std::min(a.order_u(), b.order_u());
    BiSeries s(nq, nu);
    for (int n = 0; n <= nq; ++n)
        for (int t = 0; t <= nu; ++t) s.set(n, t, a.at(n, t) - b.at(n, t));
    return s;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    const int nq = std::min(a.order_q(), b.order_q());
    const int nu = std::min(a.order_u(), b.order_u());
    BiSeries s(nq, nu);
    for (int n1 = 0; n1 <= nq; ++n1)
        for (int t1 = 0; t1 <= nu; ++t1) {
            const Rat& x = a.at(n1, t1);
            if (x == 0) continue;
            for (int n2 = 0; n1 + n2 <= nq; ++n2)
                for (int t2 = 0; t1 + t2 <= nu; ++t2) {
                    const Rat& y = b.at(n2, t2);
                    if (y == 0) continue;
                    s.set(n1 + n2, t1 + t2, s.at(n1 + n2, t1 + t2) + x * y);
                }
        }
    return s;
}

BiSeries scale(const BiSeries& a, const Rat& c) {
    BiSeries s(a.order_q(), a.order_u());
    for (int n = 0; n <= a.order_q(); ++n)
        for (int t = 0; t <= a.order_u(); ++t) s.set(n, t, a.at(n, t) * c);
    return s;
}

namespace {

// Convolution of q-rows: dest += x * y truncated in u.
void row_mul_acc(std::vector<Rat>& dest, const PowerSeries& x, const PowerSeries& y) {
    const int nu = static_cast<int>(dest.size()) - 1;
    for (int t1 = 0; t1 <= nu; ++t1) {
        if (x[t1] == 0) continue;
        for (int t2 = 0; t1 + t2 <= nu; ++t2) {
            if (y[t2] == 0) continue;
            dest[t1 + t2] += x[t1] * y[t2];
        }
    }
}

PowerSeries row(const BiSeries& a, int n) {
    PowerSeries s(a.order_u());
    for (int t = 0; t <= a.order_u(); ++t) s.set(t, a.at(n, t));
    return s;
}

void set_row(BiSeries& a, int n, const std::vector<Rat>& values) {
    for (int t = 0; t <= a.order_u(); ++t) a.set(n, t, values[t]);
}

void set_row(BiSeries& a, int n, const PowerSeries& values) {
    for (int t = 0; t <= a.order_u(); ++t) a.set(n, t, values[t]);
}

}  // namespace

// Treat a as a series in q whose coefficients are u-truncated polynomials
// and run the usual one-variable recurrences row by row.

BiSeries bi_inverse(const BiSeries& a) {
    if (a.at(0, 0) == 0) throw atlas_error("bad_input", "inverse of a bi-series with zero constant term");
    const int nq = a.order_q();
    const int nu = a.order_u();
    BiSeries b(nq, nu);
    std::vector<PowerSeries> brows(static_cast<size_t>(nq) + 1, PowerSeries(nu));
    brows[0] = inverse(row(a, 0));
    set_row(b, 0, brows[0]);
    for (int n = 1; n <= nq; ++n) {
        std::vector<Rat> acc(static_cast<size_t>(nu) + 1, Rat(0));
        for (int j = 1; j <= n; ++j) row_mul_acc(acc, row(a, j), brows[n - j]);
        std::vector<Rat> out(static_cast<size_t>(nu) + 1, Rat(0));
        PowerSeries acc_series(nu, acc);
        row_mul_acc(out, brows[0], acc_series);
        for (auto& v : out) v = -v;
        brows[n] = PowerSeries(nu, out);
        set_row(b, n, brows[n]);
    }
    return b;
}

BiSeries bi_log(const BiSeries& a) {
    if (a.at(0, 0) != 1) throw atlas_error("bad_input", "log: constant term != 1");
    const int nq = a.order_q();
    const int nu = a.order_u();
    BiSeries g(nq, nu);
    std::vector<PowerSeries> grows(static_cast<size_t>(nq) + 1, PowerSeries(nu));
    PowerSeries a0 = row(a, 0);
    grows[0] = series_log(a0);
    set_row(g, 0, grows[0]);
    const PowerSeries a0_inv = inverse(a0);
    // a dG/dq = dA/dq: n a_0 g_n = n a_n - sum_{j=1..n-1} (n-j) a_j g_{n-j}
    for (int n = 1; n <= nq; ++n) {
        std::vector<Rat> acc(static_cast<size_t>(nu) + 1, Rat(0));
        for (int t = 0; t <= nu; ++t) acc[t] = Rat(n) * a.at(n, t);
        for (int j = 1; j < n; ++j) {
            std::vector<Rat> prod(static_cast<size_t>(nu) + 1, Rat(0));
            row_mul_acc(prod, row(a, j), grows[n - j]);
            for (int t = 0; t <= nu; ++t) acc[t] -= Rat(n - j) * prod[t];
        }
        std::vector<Rat> out(static_cast<size_t>(nu) + 1, Rat(0));
        row_mul_acc(out, a0_inv, PowerSeries(nu, acc));
        for (auto& v : out) v /= n;
        grows[n] = PowerSeries(nu, out);
        set_row(g, n, grows[n]);
    }
    return g;
}

BiSeries bi_exp(const BiSeries& a) {
    if (a.at(0, 0) != 0) throw atlas_error("bad_input", "exp: nonzero constant term");
    const int nq = a.order_q();
    const int nu = a.order_u();
    BiSeries e(nq, nu);
    std::vector<PowerSeries> erows(static_cast<size_t>(nq) + 1, PowerSeries(nu));
    erows[0] = series_exp(row(a, 0));
    set_row(e, 0, erows[0]);
    // dE/dq = E dA/dq: n e_n = sum_{j=1..n} j a_j e_{n-j}
    for (int n = 1; n <= nq; ++n) {
        std::vector<Rat> acc(static_cast<size_t>(nu) + 1, Rat(0));
        for (int j = 1; j <= n; ++j) {
            std::vector<Rat> prod(static_cast<size_t>(nu) + 1, Rat(0));
            row_mul_acc(prod, row(a, j), erows[n - j]);
            for (int t = 0; t <= nu; ++t) acc[t] += Rat(j) * prod[t];
        }
        for (auto& v : acc) v /= n;
        erows[n] = PowerSeries(nu, acc);
        set_row(e, n, erows[n]);
    }
    return e;
}

}  // namespace hurwitz_atlas
