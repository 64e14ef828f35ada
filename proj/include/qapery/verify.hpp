#pragma once

#include <qapery/apery.hpp>
#include <qapery/qcomb.hpp>
#include <qapery/xpoly.hpp>

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace qapery {

/// The checkable statements. T1E1/T1E2 are the integer power-sum
/// divisibilities with sign +1 and -1; QT_PLUS/QT_MINUS their q-analogues.
enum class TheoremId {
    T1E1,
    T1E2,
    QT_PLUS,
    QT_MINUS,
    QLUCAS,
    CYC_LEMMA,
    SUN_FORMULA,
    GUO_ZENG,
    SUN_DELANNOY,
    CANCELLATION,
    B_SYMMETRY,
    SUPERCONG,
    DELANNOY_POWER_CONJ,
};

enum class Status { pass, fail, conjecture_pass, conjecture_fail };

const char* to_string(TheoremId id);
const char* to_string(Status s);
std::optional<TheoremId> theorem_from_string(const std::string& name);

/// An integer coefficient that failed a divisibility test.
/// x_degree is -1 for scalar checks.
struct CoeffWitness {
    long x_degree = -1;
    Int coefficient;
    Int modulus;
};

/// A q-divisibility failure: the remainder of the cleared division of the
/// offending coefficient. x_degree is -1 for scalar checks.
struct RemainderWitness {
    long x_degree = -1;
    IntPoly remainder;
};

/// Two integer values that should have agreed.
struct IntMismatchWitness {
    long x_degree = -1;
    Int lhs;
    Int rhs;
};

/// Two q-coefficients that should have agreed.
struct PolyMismatchWitness {
    long x_degree = -1;
    Laurent lhs;
    Laurent rhs;
};

/// On success of a q-divisibility theorem, the certified quotient H with
/// sum = divisor * H; recomputing divisor * H must reproduce the sum.
struct QuotientWitness {
    XPoly quotient;
};

using Witness = std::variant<CoeffWitness, RemainderWitness, IntMismatchWitness,
                             PolyMismatchWitness, QuotientWitness>;

struct VerificationReport {
    TheoremId theorem = TheoremId::T1E1;
    std::map<std::string, long> params;
    Status status = Status::pass;
    std::optional<Witness> witness;
    long elapsed_ms = 0;

    bool passed() const { return status == Status::pass || status == Status::conjecture_pass; }
};

/// Shared caches threaded through the verifiers. All members are internally
/// synchronized; one context can serve concurrent sweep workers.
struct VerifyContext {
    CyclotomicCache cyclo;
    QBinomCache qbinom;
    PowerCache powers;
};

// ------------------------------------------------------------ sum builders

/// sum_{k=0}^{n-1} sign^k (2k+1) A_k^(alpha)(x)^m over the integers.
IntXPoly apery_power_sum(long n, long m, long alpha, int sign, VerifyContext& ctx);

/// sum_{k=0}^{n-1} q^(n-1-k) [2k+1]_q A_k^(alpha)(x;q)^m.
XPoly q_apery_power_sum_plus(long n, long m, long alpha, VerifyContext& ctx);

/// sum_{k=0}^{n-1} (-1)^k q^(n-1-k) [2k+1]_q A_k^(alpha)(x;q^2)^m.
XPoly q_apery_power_sum_minus(long n, long m, long alpha, VerifyContext& ctx);

/// The divisor certified for the alternating q-sum: product of Phi_d(q) over
/// odd divisors d > 1 of n times Phi_2d(q) over even divisors d of n (the
/// latter equals Phi_d(q^2)). Its value at q = 1 is exactly n.
IntPoly minus_divisor(long n, CyclotomicCache& cyclo);

// -------------------------------------------------------------- verifiers

/// n | sum_{k<n} sign^k (2k+1) A_k^(alpha)(x)^m, coefficient-wise.
VerificationReport verify_integer_sum(long n, long m, long alpha, int sign, VerifyContext& ctx);

/// [n]_q divides the q power sum; on pass the report carries the quotient H
/// and the q = 1 specialization has been checked against the integer sum.
VerificationReport verify_q_sum_plus(long n, long m, long alpha, VerifyContext& ctx);

/// minus_divisor(n) divides the alternating q^2 power sum; same quotient and
/// q = 1 cross-checks as the plus case.
VerificationReport verify_q_sum_minus(long n, long m, long alpha, VerifyContext& ctx);

/// (1/n) sum (2k+1) A_k(x) against its closed form.
VerificationReport verify_sun_formula(long n, VerifyContext& ctx);

/// (1/n) sum (-1)^k (2k+1) A_k(x) against its closed form.
VerificationReport verify_guo_zeng(long n, VerifyContext& ctx);

/// (1/n) sum (2k+1) D_k(x) against its closed form.
VerificationReport verify_sun_delannoy(long n, VerifyContext& ctx);

/// q^(-1-b) [2b+1]_q + q^b [-2b-1]_q == 0.
VerificationReport verify_cancellation(long b);

/// b_poly(a, b, d, alpha) == b_poly(a, d-1-b, d, alpha).
VerificationReport verify_b_symmetry(long a, long b, long d, long alpha);

/// A_{(p-1)/2} == a(p) mod p^2, a(p) from the eta product. p must be an odd
/// prime; throws std::invalid_argument otherwise.
VerificationReport verify_supercongruence(long p, VerifyContext& ctx);

/// q-Lucas congruence as a report.
VerificationReport verify_q_lucas(long a, long b, long h, long l, long d, VerifyContext& ctx);

/// Cyclotomic substitution lemma as a report.
VerificationReport verify_cyclotomic_lemma(long d, VerifyContext& ctx);

/// Empirical sweep of n | sum (2k+1) D_k(x)^m. Returns conjecture_pass or
/// conjecture_fail; a counterexample is a finding, not an error.
VerificationReport explore_delannoy_power(long n, long m, VerifyContext& ctx);

}  // namespace qapery
