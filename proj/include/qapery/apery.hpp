#pragma once

#include <qapery/xpoly.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

namespace qapery {

/// A_n^(alpha)(x): the x^k coefficient is (binom(n,k) * binom(n+k,k))^alpha.
/// alpha = 2 gives the classical Apery polynomial, alpha = 1 the central
/// Delannoy polynomial.
IntXPoly apery_poly(long n, long alpha);

/// D_n(x) = A_n^(1)(x).
IntXPoly delannoy_poly(long n);

/// A_k^(alpha)(x;q): the x^j coefficient is
/// q^(alpha*(C(j,2) - j*k)) * qbinom(k,j)^alpha * qbinom(k+j,j)^alpha.
/// The exponent carries the factor alpha: that is the unique choice under
/// which the q-binomial reflection identity turns this sum into the
/// alternate expansion below, and the divisibility theorems hold for
/// alpha > 1. Specializes to apery_poly(k, alpha) at q = 1.
XPoly q_apery_poly(long k, long alpha);

/// Same value as q_apery_poly, built from the alternate expansion
/// sum_j (-1)^(alpha*j) q^(alpha*j^2) qbinom(k,j)^alpha qbinom(-k-1,j)^alpha x^j
/// (the sum truncates to 0 <= j <= k since qbinom(k,j) vanishes outside).
/// Kept as an independent construction path for cross-checking.
XPoly q_apery_poly_alt(long k, long alpha);

/// B_{a,b,d}^(alpha)(x;q), the block polynomial that a q-Apery polynomial
/// with index a*d + b reduces to modulo Phi_d: the x^(s*d+t) coefficient is
/// (-1)^(alpha*(s*d+t)) q^(alpha*t^2) binom(a,s)^alpha qbinom(b,t)^alpha
/// binom(-a-1,s)^alpha qbinom(d-b-1,t)^alpha, summed over 0 <= s <= a and
/// 0 <= t <= d-1. Symmetric under b -> d-1-b.
/// Requires a >= 0, d >= 2, 0 <= b <= d-1, alpha >= 1.
XPoly b_poly(long a, long b, long d, long alpha);

/// Coefficients a(n) of the q-expansion q * prod (1-q^2n)^4 (1-q^4n)^4,
/// the eta product eta(2z)^4 eta(4z)^4, up to q^limit.
struct EtaCoefficients {
    long limit = 0;
    std::vector<Int> a;   // a[n] at index n; a[0] unused and zero

    const Int& at(long n) const;
};

EtaCoefficients eta_product_coeffs(long limit);

/// Process-wide memo of the m-th powers of (q-)Apery polynomials, keyed by
/// (k, alpha, m). The sweeps revisit every k below the largest n; without
/// this the quadratic re-summation cost dominates. Thread-safe; values are
/// shared immutably.
class PowerCache {
public:
    /// apery_poly(k, alpha)^m
    std::shared_ptr<const IntXPoly> int_power(long k, long alpha, long m);
    /// q_apery_poly(k, alpha)^m
    std::shared_ptr<const XPoly> q_power(long k, long alpha, long m);

private:
    using Key = std::tuple<long, long, long>;
    std::map<Key, std::shared_ptr<const IntXPoly>> int_table_;
    std::map<Key, std::shared_ptr<const XPoly>> q_table_;
    std::mutex mu_;
};

}  // namespace qapery
