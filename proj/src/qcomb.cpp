#include <qapery/qcomb.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qapery {

Laurent q_int(long n) {
    if (n == 0) return {};
    if (n > 0) return Laurent::from_coeffs(0, std::vector<Int>(static_cast<std::size_t>(n), Int(1)));
    return Laurent::from_coeffs(n, std::vector<Int>(static_cast<std::size_t>(-n), Int(-1)));
}

IntPoly q_int_poly(long n) {
    if (n < 1) throw std::invalid_argument("q_int_poly: n must be >= 1");
    return IntPoly::from_coeffs(std::vector<Int>(static_cast<std::size_t>(n), Int(1)));
}

Laurent q_binom(long n, long k) {
    if (k < 0) return {};
    if (k == 0) return Laurent(1);
    if (n >= 0) {
        if (k > n) return {};
        k = std::min(k, n - k);   // symmetry keeps the product short
        if (k == 0) return Laurent(1);
    }
    Laurent acc(1);
    for (long j = 1; j <= k; ++j) {
        acc *= q_int(n - j + 1);
        if (acc.is_zero()) return {};
        acc = divexact(acc, q_int_poly(j));
    }
    return acc;
}

Int binomial(long n, long k) {
    if (k < 0) return Int(0);
    Int acc(1);
    for (long j = 0; j < k; ++j) {
        acc *= Int(n - j);
        if (acc == 0) return acc;
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(j + 1));
    }
    return acc;
}

long euler_phi(long d) {
    if (d < 1) throw std::invalid_argument("euler_phi: d must be >= 1");
    long phi = 1;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        d /= p;
        phi *= p - 1;
        while (d % p == 0) {
            d /= p;
            phi *= p;
        }
    }
    if (d > 1) phi *= d - 1;
    return phi;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

const IntPoly& CyclotomicCache::get(long d) {
    if (d < 1) throw std::invalid_argument("CyclotomicCache::get: d must be >= 1");
    std::lock_guard<std::mutex> lock(mu_);
    auto hit = table_.find(d);
    if (hit != table_.end()) return hit->second;
    // Fill bottom-up over the divisors of d so each step only reads entries
    // that are already present.
    for (long e = 1; e <= d; ++e) {
        if (d % e != 0 || table_.count(e)) continue;
        std::vector<Int> c(static_cast<std::size_t>(e + 1), Int(0));
        c.front() = -1;
        c.back() = 1;
        IntPoly acc = IntPoly::from_coeffs(std::move(c));   // q^e - 1
        for (long f = 1; f < e; ++f) {
            if (e % f != 0) continue;
            DivRem dr = divrem_monic(acc, table_.at(f));
            if (!dr.rem.is_zero())
                throw std::logic_error("CyclotomicCache: inexact cyclotomic division");
            acc = std::move(dr.quot);
        }
        const Int c0 = acc.constant_term();
        if (!acc.is_monic() || (c0 != 1 && c0 != -1) || acc.degree() != euler_phi(e))
            throw std::logic_error("CyclotomicCache: invariant violation");
        table_.emplace(e, std::move(acc));
    }
    return table_.at(d);
}

const Laurent& QBinomCache::get(long n, long k) {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = table_.try_emplace({n, k});
    if (inserted) it->second = q_binom(n, k);
    return it->second;
}

bool q_int_factorization_check(long n, CyclotomicCache& cyclo) {
    if (n < 2) throw std::invalid_argument("q_int_factorization_check: n must be >= 2");
    IntPoly prod(1);
    for (long d = 2; d <= n; ++d)
        if (n % d == 0) prod *= cyclo.get(d);
    return prod == q_int_poly(n);
}

bool q_lucas_check(long a, long b, long h, long l, long d, CyclotomicCache& cyclo) {
    if (d < 2 || a < 0 || h < 0 || b < 0 || b > d - 1 || l < 0 || l > d - 1)
        throw std::invalid_argument("q_lucas_check: parameters out of range");
    const Laurent diff = q_binom(a * d + b, h * d + l) - Laurent(binomial(a, h)) * q_binom(b, l);
    return is_divisible(diff, cyclo.get(d));
}

bool cyclotomic_lemma_check(long d, CyclotomicCache& cyclo) {
    if (d < 2) throw std::invalid_argument("cyclotomic_lemma_check: d must be >= 2");
    const Laurent phi_d_q2 = cyclo.get(d).to_laurent().subst_q_squared();
    if (d % 2 == 1) return is_divisible(phi_d_q2, cyclo.get(d));
    const IntPoly& phi_2d = cyclo.get(2 * d);
    if (IntPoly::from_laurent(phi_d_q2) != phi_2d) return false;
    // q^d == -1 modulo Phi_2d(q)
    return is_divisible(Laurent::monomial(1, d) + Laurent(1), phi_2d);
}

}  // namespace qapery
