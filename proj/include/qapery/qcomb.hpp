#pragma once

#include <qapery/laurent.hpp>

#include <map>
#include <mutex>
#include <utility>

namespace qapery {

/// q-integer [n]_q = (1 - q^n)/(1 - q) for any integer n:
/// n >= 0 gives 1 + q + ... + q^(n-1); n < 0 gives -(q^n + ... + q^-1).
Laurent q_int(long n);

/// [n]_q for n >= 1 as an ordinary polynomial, usable as a monic divisor.
IntPoly q_int_poly(long n);

/// Gaussian binomial coefficient for any integers n, k. Zero for k < 0, one
/// for k = 0; otherwise the product of [n-j+1]_q / [j]_q for j = 1..k with
/// the division performed exactly at every step. Negative upper index yields
/// a genuine Laurent polynomial.
Laurent q_binom(long n, long k);

/// Ordinary binomial coefficient for any integer n and k >= 0, via the
/// falling factorial n(n-1)...(n-k+1)/k!, so binom(-a-1, s) equals
/// (-1)^s * binom(a+s, s). Zero for k < 0.
Int binomial(long n, long k);

/// Euler totient by trial-division factorization.
long euler_phi(long d);

/// Trial-division primality; p < 2 is not prime.
bool is_prime(long p);

/// Memoized cyclotomic polynomials. Phi_d is computed as (q^d - 1) divided
/// exactly by the product of Phi_e over proper divisors e of d; every stored
/// value is checked monic with constant term +-1 and degree phi(d).
/// Thread-safe; entries are never evicted, so returned references stay valid.
class CyclotomicCache {
public:
    const IntPoly& get(long d);

private:
    std::map<long, IntPoly> table_;
    std::mutex mu_;
};

/// Memoized Gaussian binomials, for the q-Lucas sweeps which revisit the
/// same (n, k) pairs many times. Thread-safe, never evicted.
class QBinomCache {
public:
    const Laurent& get(long n, long k);

private:
    std::map<std::pair<long, long>, Laurent> table_;
    std::mutex mu_;
};

/// Checks [n]_q == product of Phi_d over divisors d > 1 of n, exactly.
bool q_int_factorization_check(long n, CyclotomicCache& cyclo);

/// q-Lucas congruence: qbinom(a*d+b, h*d+l) == binom(a,h) * qbinom(b,l)
/// modulo Phi_d. Requires d >= 2, a >= 0, h >= 0, 0 <= b,l <= d-1.
bool q_lucas_check(long a, long b, long h, long l, long d, CyclotomicCache& cyclo);

/// For odd d: Phi_d(q) divides Phi_d(q^2). For even d: Phi_d(q^2) equals
/// Phi_2d(q) exactly, and Phi_2d(q) divides q^d + 1. Requires d >= 2.
bool cyclotomic_lemma_check(long d, CyclotomicCache& cyclo);

}  // namespace qapery
