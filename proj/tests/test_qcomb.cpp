#include <qapery/qcomb.hpp>

#include <doctest.h>

#include "oracles.hpp"

using namespace qapery;

namespace {

Laurent L(long offset, std::vector<long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return Laurent::from_coeffs(offset, std::move(c));
}

long binom2(long j) { return j * (j - 1) / 2; }

}   // namespace

TEST_SUITE_BEGIN("qcomb");

TEST_CASE("q-integers") {
    CHECK(q_int(3) == L(0, {1, 1, 1}));
    CHECK(q_int(0) == Laurent{});
    CHECK(q_int(1) == Laurent(1));
    CHECK(q_int(-2) == L(-2, {-1, -1}));
    // defining identity (1 - q^n) = [n]_q (1 - q) for all n
    const Laurent one_minus_q = L(0, {1, -1});
    for (long n = -8; n <= 8; ++n) {
        const Laurent lhs = Laurent(1) - Laurent::monomial(1, n);
        CHECK(lhs == q_int(n) * one_minus_q);
        CHECK(q_int(n).eval_one() == n);
    }
    CHECK(q_int_poly(5).to_laurent() == q_int(5));
    CHECK_THROWS_AS(q_int_poly(0), std::invalid_argument);
    // [3]_q under q -> q^2 is [3] evaluated in q^2
    CHECK(q_int(3).subst_q_squared() == L(0, {1, 0, 1, 0, 1}));
}

TEST_CASE("q-binomial conventions and small values") {
    CHECK(q_binom(4, 2) == L(0, {1, 1, 2, 1, 1}));
    CHECK(q_binom(7, 0) == Laurent(1));
    CHECK(q_binom(-5, 0) == Laurent(1));
    CHECK(q_binom(3, -1) == Laurent{});
    CHECK(q_binom(2, 5) == Laurent{});
    CHECK(q_binom(-1, 2) == L(-3, {1}));
}

TEST_CASE("q-binomials match the Pascal recurrence") {
    for (long n = 0; n <= 16; ++n)
        for (long k = 0; k <= n; ++k) CHECK(q_binom(n, k) == oracles::pascal_qbinom(n, k));
    // the recurrence itself, as stated
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(q_binom(n + 1, k) == q_binom(n, k).shifted(k) + q_binom(n, k - 1));
}

TEST_CASE("q-binomials with nonnegative arguments are ordinary polynomials") {
    for (long n = 0; n <= 12; ++n) {
        for (long k = 0; k <= n; ++k) {
            const Laurent b = q_binom(n, k);
            CHECK(b.min_exp() == 0);
            for (long e = 0; e <= b.max_exp(); ++e) CHECK(b.coeff(e) >= 0);
        }
    }
}

TEST_CASE("reflection to negative upper index") {
    // qbinom(k+j, j) = (-1)^j q^(jk + C(j+1,2)) qbinom(-k-1, j)
    for (long k = 0; k <= 12; ++k) {
        for (long j = 0; j <= k; ++j) {
            Laurent rhs = q_binom(-k - 1, j).shifted(j * k + binom2(j + 1));
            if (j % 2 != 0) rhs = -rhs;
            CHECK(q_binom(k + j, j) == rhs);
        }
    }
}

TEST_CASE("q-binomial specialization at q = 1") {
    for (long n = -10; n <= 20; ++n) {
        for (long k = 0; k <= 10; ++k) {
            const Int expect = n >= 0 ? oracles::pascal_binom(n, k)
                                      : (k % 2 == 0 ? oracles::pascal_binom(-n - 1 + k, k)
                                                    : -oracles::pascal_binom(-n - 1 + k, k));
            CHECK(q_binom(n, k).eval_one() == expect);
            CHECK(binomial(n, k) == expect);
        }
    }
    CHECK(binomial(5, -2) == 0);
}

TEST_CASE("cyclotomic polynomials") {
    CyclotomicCache cyclo;
    CHECK(cyclo.get(1) == IntPoly::from_coeffs({Int(-1), Int(1)}));
    CHECK(cyclo.get(2) == IntPoly::from_coeffs({Int(1), Int(1)}));
    CHECK(cyclo.get(6) == IntPoly::from_coeffs({Int(1), Int(-1), Int(1)}));
    CHECK(cyclo.get(12) == IntPoly::from_coeffs({Int(1), Int(0), Int(-1), Int(0), Int(1)}));
    SUBCASE("prime index gives the full q-integer") {
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) CHECK(cyclo.get(p) == q_int_poly(p));
    }
    SUBCASE("degree equals the totient, constant term is a unit") {
        for (long d = 1; d <= 50; ++d) {
            CHECK(cyclo.get(d).degree() == euler_phi(d));
            CHECK(cyclo.get(d).is_monic());
            const Int c0 = cyclo.get(d).constant_term();
            CHECK((c0 == 1 || c0 == -1));
        }
    }
    SUBCASE("product over all divisors of n is q^n - 1") {
        for (long n = 1; n <= 60; ++n) {
            IntPoly prod(1);
            for (long d = 1; d <= n; ++d)
                if (n % d == 0) prod *= cyclo.get(d);
            std::vector<Int> c(static_cast<std::size_t>(n + 1), Int(0));
            c.front() = -1;
            c.back() = 1;
            CHECK(prod == IntPoly::from_coeffs(std::move(c)));
        }
    }
}

TEST_CASE("q-integer factorization into cyclotomics") {
    CyclotomicCache cyclo;
    CHECK(q_int_factorization_check(2, cyclo));
    CHECK(q_int_factorization_check(6, cyclo));
    for (long n = 2; n <= 60; ++n) CHECK(q_int_factorization_check(n, cyclo));
    CHECK_THROWS_AS(q_int_factorization_check(1, cyclo), std::invalid_argument);
}

TEST_CASE("totient and primality helpers") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    for (long d = 1; d <= 60; ++d) {
        long count = 0;
        for (long a = 1; a <= d; ++a) {
            long x = a, y = d;
            while (y != 0) {
                const long t = x % y;
                x = y;
                y = t;
            }
            if (x == 1) ++count;
        }
        CHECK(euler_phi(d) == count);
    }
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("congruent q-integers differ by a multiple of [n]_q") {
    for (long n = 2; n <= 12; ++n) {
        const IntPoly modulus = q_int_poly(n);
        for (long a = 1; a <= 30; ++a)
            for (long b = 1; b <= 30; ++b)
                if ((a - b) % n == 0) CHECK(is_divisible(q_int(a) - q_int(b), modulus));
    }
}

TEST_CASE("q-Lucas congruence") {
    CyclotomicCache cyclo;
    SUBCASE("worked example") {
        // qbinom(7,4) == 2 * qbinom(1,1) modulo Phi_3
        CHECK(q_lucas_check(2, 1, 1, 1, 3, cyclo));
        const Laurent diff = q_binom(7, 4) - Laurent(2);
        CHECK(is_divisible(diff, cyclo.get(3)));
    }
    SUBCASE("vanishing rows") {
        // h > a with l <= b: both sides zero
        CHECK(q_lucas_check(1, 2, 3, 1, 4, cyclo));
    }
    SUBCASE("small exhaustive grid") {
        for (long d = 2; d <= 6; ++d)
            for (long a = 0; a <= 4; ++a)
                for (long h = 0; h <= 4; ++h)
                    for (long b = 0; b < d; ++b)
                        for (long l = 0; l < d; ++l) CHECK(q_lucas_check(a, b, h, l, d, cyclo));
    }
    CHECK_THROWS_AS(q_lucas_check(1, 3, 1, 0, 3, cyclo), std::invalid_argument);
    CHECK_THROWS_AS(q_lucas_check(1, 0, 1, 0, 1, cyclo), std::invalid_argument);
}

TEST_CASE("cyclotomic substitution lemma") {
    CyclotomicCache cyclo;
    SUBCASE("odd case worked example") {
        // Phi_3(q^2) = (q^2+q+1)(q^2-q+1)
        const Laurent expect = L(0, {1, 1, 1}) * L(0, {1, -1, 1});
        CHECK(cyclo.get(3).to_laurent().subst_q_squared() == expect);
        CHECK(cyclotomic_lemma_check(3, cyclo));
    }
    SUBCASE("even case worked example") {
        CHECK(cyclo.get(2).to_laurent().subst_q_squared() == cyclo.get(4).to_laurent());
        CHECK(cyclotomic_lemma_check(2, cyclo));
    }
    for (long d = 2; d <= 30; ++d) CHECK(cyclotomic_lemma_check(d, cyclo));
    CHECK_THROWS_AS(cyclotomic_lemma_check(1, cyclo), std::invalid_argument);
}

TEST_CASE("q-binomial cache returns the same values") {
    QBinomCache cache;
    for (long n = -4; n <= 10; ++n)
        for (long k = 0; k <= 6; ++k) CHECK(cache.get(n, k) == q_binom(n, k));
    // second lookup hits the memo
    CHECK(cache.get(10, 4) == q_binom(10, 4));
}

TEST_SUITE_END();
