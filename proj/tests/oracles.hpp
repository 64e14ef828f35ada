#pragma once

// Reference implementations used only to compute expected test values.
// They deliberately avoid the library's algorithmic routes: multiplication
// goes through a sparse exponent map instead of dense convolution,
// q-binomials come from the Pascal recurrence instead of the product
// formula, and ordinary binomials from the additive Pascal triangle instead
// of multiplicative accumulation.

#include <qapery/laurent.hpp>
#include <qapery/xpoly.hpp>

#include <map>
#include <random>
#include <vector>

namespace oracles {

using qapery::Int;
using qapery::IntPoly;
using qapery::Laurent;
using qapery::XPoly;

inline Laurent laurent_from_map(const std::map<long, Int>& terms) {
    if (terms.empty()) return {};
    const long lo = terms.begin()->first;
    const long hi = terms.rbegin()->first;
    std::vector<Int> coeffs(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (const auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e - lo)] = c;
    return Laurent::from_coeffs(lo, std::move(coeffs));
}

inline Laurent naive_mul(const Laurent& a, const Laurent& b) {
    std::map<long, Int> acc;
    if (!a.is_zero() && !b.is_zero()) {
        for (long i = a.min_exp(); i <= a.max_exp(); ++i) {
            for (long j = b.min_exp(); j <= b.max_exp(); ++j) acc[i + j] += a.coeff(i) * b.coeff(j);
        }
    }
    return laurent_from_map(acc);
}

// Gaussian binomial for 0 <= k <= n via the Pascal recurrence
// qbinom(n+1, k) = q^k qbinom(n, k) + qbinom(n, k-1).
inline Laurent pascal_qbinom(long n, long k) {
    if (k < 0 || k > n) return {};
    std::vector<std::vector<Laurent>> row(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i) {
        row[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), Laurent{});
        row[static_cast<std::size_t>(i)][0] = Laurent(1);
        for (long j = 1; j < i; ++j) {
            row[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)].shifted(j) +
                row[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        }
        row[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Laurent(1);
    }
    return row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Additive Pascal triangle for n, k >= 0.
inline Int pascal_binom(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    std::vector<Int> row{Int(1)};
    for (long i = 1; i <= n; ++i) {
        std::vector<Int> next(static_cast<std::size_t>(i + 1), Int(0));
        for (long j = 0; j <= i; ++j) {
            if (j < i) next[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
            if (j > 0) next[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

// Small random values for property tests: coefficients in [-9, 9], exponent
// spans at most 8.
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    Int coeff() { return Int(pick(-9, 9)); }

    Laurent laurent(long min_offset = -4, long max_offset = 4, long max_len = 8) {
        const long len = pick(0, max_len);
        if (len == 0) return {};
        std::vector<Int> c(static_cast<std::size_t>(len));
        for (Int& v : c) v = coeff();
        return Laurent::from_coeffs(pick(min_offset, max_offset), std::move(c));
    }

    IntPoly monic_poly(long min_deg, long max_deg) {
        const long deg = pick(min_deg, max_deg);
        std::vector<Int> c(static_cast<std::size_t>(deg + 1));
        for (Int& v : c) v = coeff();
        c.back() = 1;
        return IntPoly::from_coeffs(std::move(c));
    }

    IntPoly poly(long max_deg) {
        const long len = pick(0, max_deg + 1);
        std::vector<Int> c(static_cast<std::size_t>(len));
        for (Int& v : c) v = coeff();
        return IntPoly::from_coeffs(std::move(c));
    }

    XPoly xpoly(long max_xdeg = 3) {
        const long len = pick(0, max_xdeg + 1);
        std::vector<Laurent> c(static_cast<std::size_t>(len));
        for (Laurent& v : c) v = laurent(-3, 3, 5);
        return XPoly::from_coeffs(std::move(c));
    }

    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

private:
    std::mt19937 gen_;
};

}  // namespace oracles
