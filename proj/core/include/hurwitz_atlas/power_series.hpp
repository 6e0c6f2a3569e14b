#pragma once

#include <vector>

#include "hurwitz_atlas/rational.hpp"

namespace hurwitz_atlas {

// Truncated formal power series in q over Rat. The order N is explicit in
// every value: a series stores coefficients of q^0..q^N. Binary operations
// truncate to the smaller order instead of erroring, so pipelines compose.
class PowerSeries {
public:
    explicit PowerSeries(int order) : coeffs_(static_cast<size_t>(order) + 1, Rat(0)) {}
    PowerSeries(int order, std::vector<Rat> coeffs);

    static PowerSeries constant(const Rat& value, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& operator[](int n) const { return coeffs_[static_cast<size_t>(n)]; }
    void set(int n, Rat value) { coeffs_[static_cast<size_t>(n)] = std::move(value); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    PowerSeries truncated(int order) const;

    bool operator==(const PowerSeries& other) const = default;

private:
    std::vector<Rat> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& a, const Rat& c);

// a^k. Negative k requires a nonzero constant term (invert, then power).
PowerSeries pow(const PowerSeries& a, long k);

// 1/a; the constant term must be nonzero.
PowerSeries inverse(const PowerSeries& a);

// D = q d/dq: multiplies the coefficient of q^n by n.
PowerSeries d_operator(const PowerSeries& a);

PowerSeries series_exp(const PowerSeries& a);  // constant term must be 0
PowerSeries series_log(const PowerSeries& a);  // constant term must be 1

// The tree series: Y has coefficients n^{n-1}/n!, Z has n^n/n!.
PowerSeries gen_y(int order);
PowerSeries gen_z(int order);

// Total height of doubly marked labeled trees on n vertices:
// A_n = n! * sum_{k=0}^{n-2} n^k/k!; first values 0, 2, 24, 312, 4720.
Int a_number(int n);

// The series sum A_n q^n / n!.
PowerSeries gen_a_sequence(int order);

// Truncated series in q and a second marker u, on a fixed rectangle of
// coefficients (order_q+1) x (order_u+1).
class BiSeries {
public:
    BiSeries(int order_q, int order_u)
        : nq_(order_q), nu_(order_u), coeffs_(static_cast<size_t>(order_q + 1) * (order_u + 1), Rat(0)) {}

    int order_q() const { return nq_; }
    int order_u() const { return nu_; }
    const Rat& at(int n, int t) const { return coeffs_[index(n, t)]; }
    void set(int n, int t, Rat value) { coeffs_[index(n, t)] = std::move(value); }

    // The q-power-series obtained by keeping only u^t.
    PowerSeries u_slice(int t) const;

    bool operator==(const BiSeries& other) const = default;

private:
    size_t index(int n, int t) const {
        return static_cast<size_t>(n) * (nu_ + 1) + static_cast<size_t>(t);
    }

    int nq_;
    int nu_;
    std::vector<Rat> coeffs_;
};

BiSeries operator+(const BiSeries& a, const BiSeries& b);
BiSeries operator-(const BiSeries& a, const BiSeries& b);
BiSeries operator*(const BiSeries& a, const BiSeries& b);
BiSeries scale(const BiSeries& a, const Rat& c);
BiSeries bi_inverse(const BiSeries& a);  // coefficient at (0,0) must be nonzero
BiSeries bi_log(const BiSeries& a);      // coefficient at (0,0) must be 1
BiSeries bi_exp(const BiSeries& a);      // coefficient at (0,0) must be 0

}  // namespace hurwitz_atlas
