// Acceptance suite: runs every verified statement over its full parameter
// range with exact arithmetic (zero tolerance) and prints one PASS/FAIL line
// per criterion. Exits 0 only if all criteria pass.

#include <qapery/json_io.hpp>
#include <qapery/sweep.hpp>
#include <qapery/verify.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

using namespace qapery;

namespace {

namespace fs = std::filesystem;

struct Tally {
    long cases = 0;
    bool ok = true;
    std::string first_failure;

    void add(bool pass, const std::string& what) {
        ++cases;
        if (!pass && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

class Suite {
public:
    void report(int index, const char* label, const Tally& t, double seconds) {
        std::printf("[%2d] %s  %s (%ld cases, %.1fs)%s\n", index, t.ok ? "PASS" : "FAIL", label,
                    t.cases, seconds, t.ok ? "" : ("  first failure: " + t.first_failure).c_str());
        std::fflush(stdout);
        all_ok_ &= t.ok;
    }

    bool all_ok() const { return all_ok_; }

private:
    bool all_ok_ = true;
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string params_str(const VerificationReport& r) {
    std::ostringstream os;
    os << to_string(r.theorem);
    for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
    return os.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return {};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

using QKey = std::tuple<long, long, long>;   // n, m, alpha

}   // namespace

int main() {
    Suite suite;
    VerifyContext ctx;

    // 1. integer power sums divisible by n, both signs
    {
        const auto t0 = std::chrono::steady_clock::now();
        Tally t;
        for (int sign : {+1, -1})
            for (long n = 1; n <= 100; ++n)
                for (long m = 1; m <= 3; ++m)
                    for (long alpha = 1; alpha <= 3; ++alpha) {
                        const auto r = verify_integer_sum(n, m, alpha, sign, ctx);
                        t.add(r.status == Status::pass, params_str(r));
                    }
        suite.report(1, "integer power sums divisible by n (n<=100, m<=3, alpha<=3, both signs)",
                     t, seconds_since(t0));
    }

    // 2. q power sums divisible by [n]_q; quotients kept for the bridge check
    std::map<QKey, IntXPoly> plus_quotients_at_one;
    {
        const auto t0 = std::chrono::steady_clock::now();
        Tally t;
        auto run = [&](long n, long m, long alpha) {
            const auto r = verify_q_sum_plus(n, m, alpha, ctx);
            const bool pass = r.status == Status::pass && r.witness.has_value() &&
                              std::holds_alternative<QuotientWitness>(*r.witness);
            t.add(pass, params_str(r));
            if (pass)
                plus_quotients_at_one.emplace(
                    QKey{n, m, alpha}, std::get<QuotientWitness>(*r.witness).quotient.eval_one());
        };
        for (long alpha = 1; alpha <= 2; ++alpha) {
            for (long n = 1; n <= 30; ++n) run(n, 1, alpha);
            for (long n = 1; n <= 20; ++n) run(n, 2, alpha);
        }
        suite.report(2, "q power sums divisible by [n]_q (n<=30 m=1, n<=20 m=2, alpha<=2)", t,
                     seconds_since(t0));
    }

    // 3. alternating q^2 power sums divisible by the cyclotomic product
    {
        const auto t0 = std::chrono::steady_clock::now();
        Tally t;
        for (long alpha = 1; alpha <= 2; ++alpha) {
            for (long n = 1; n <= 24; ++n) {
                const auto r = verify_q_sum_minus(n, 1, alpha, ctx);
                t.add(r.status == Status::pass, params_str(r));
            }
            for (long n = 1; n <= 16; ++n) {
                const auto r = verify_q_sum_minus(n, 2, alpha, ctx);
                t.add(r.status == Status::pass, params_str(r));
            }
        }
        suite.report(3, "alternating q^2 sums divisible by the cyclotomic product "
                        "(n<=24 m=1, n<=16 m=2, alpha<=2)",
                     t, seconds_since(t0));
    }

    // 4. q-Lucas congruence, exhaustive grid
    {
        const auto t0 = std::chrono::steady_clock::now();
        Tally t;
        for (long d = 2; d <= 12; ++d)
            for (long a = 0; a <= 6; ++a)
                for (long h = 0; h <= 6; ++h)
                    for (long b = 0; b < d; ++b)
                        for (long l = 0; l < d; ++l) {
                            const auto r = verify_q_lucas(a, b, h, l, d, ctx);
                            t.add(r.status == Status::pass, params_str(r));
                        }
        suite.report(4, "q-Lucas congruence (d<=12, a,h<=6, all b,l)", t, seconds_since(t0));
    }

    // 5. cyclotomic substitution lemma, both parities
    {
        const auto t0 = std::chrono::steady_clock::now();
        Tally t;
        for (long d = 2; d <= 50; ++d) {
            const auto r = verify_cyclotomic_lemma(d, ctx);
            t.add(r.status == Status::pass, params_str(r));
        }
        suite.report(5, "cyclotomic substitution lemma (2<=d<=50)", t, seconds_since(t0));
    }

    // 6. closed forms for the three m=1 sums
    {
        const auto t0 = std::chrono::steady_clock::now();
        Tally t;
        for (long n = 1; n <= 60; ++n) {
            for (const auto& r : {verify_sun_formula(n, ctx), verify_guo_zeng(n, ctx),
                                  verify_sun_delannoy(n, ctx)})
                t.add(r.status == Status::pass, params_str(r));
        }
        suite.report(6, "closed forms of the weighted sums (n<=60)", t, seconds_since(t0));
    }

    // 7. proof-object identities
    {
        const auto t0 = std::chrono::steady_clock::now();
        Tally t;
        for (long b = 0; b <= 50; ++b) {
            const auto r = verify_cancellation(b);
            t.add(r.status == Status::pass, params_str(r));
        }
        for (long a = 0; a <= 3; ++a)
            for (long d = 2; d <= 6; ++d)
                for (long b = 0; b < d; ++b)
                    for (long alpha = 1; alpha <= 2; ++alpha) {
                        const auto r = verify_b_symmetry(a, b, d, alpha);
                        t.add(r.status == Status::pass, params_str(r));
                    }
        for (long k = 0; k <= 10; ++k)
            for (long alpha = 1; alpha <= 3; ++alpha) {
                std::ostringstream what;
                what << "q-apery construction paths k=" << k << " alpha=" << alpha;
                t.add(q_apery_poly(k, alpha) == q_apery_poly_alt(k, alpha), what.str());
            }
        suite.report(7, "weight cancellation (b<=50), block symmetry (a<=3, d<=6), "
                        "q-apery construction paths (k<=10, alpha<=3)",
                     t, seconds_since(t0));
    }

    // 8. q-integer factorization into cyclotomics
    {
        const auto t0 = std::chrono::steady_clock::now();
        Tally t;
        for (long n = 2; n <= 200; ++n)
            t.add(q_int_factorization_check(n, ctx.cyclo), "factorization n=" + std::to_string(n));
        suite.report(8, "[n]_q equals its cyclotomic factorization (2<=n<=200)", t,
                     seconds_since(t0));
    }

    // 9. supercongruence against the eta-product coefficients
    {
        const auto t0 = std::chrono::steady_clock::now();
        Tally t;
        const EtaCoefficients eta = eta_product_coeffs(97);
        t.add(eta.at(3) == -4, "eta coefficient at 3");
        t.add(eta.at(5) == -2, "eta coefficient at 5");
        for (long p = 3; p <= 97; p += 2) {
            if (!is_prime(p)) continue;
            const auto r = verify_supercongruence(p, ctx);
            t.add(r.status == Status::pass, params_str(r));
        }
        suite.report(9, "central apery numbers match eta coefficients mod p^2 (odd primes p<=97)",
                     t, seconds_since(t0));
    }

    // 10. bridge: n * H(x, 1) reproduces the integer sum, for every case of 2
    {
        const auto t0 = std::chrono::steady_clock::now();
        Tally t;
        for (const auto& [key, h_at_one] : plus_quotients_at_one) {
            const auto [n, m, alpha] = key;
            std::ostringstream what;
            what << "bridge n=" << n << " m=" << m << " alpha=" << alpha;
            t.add(h_at_one.scaled(Int(n)) == apery_power_sum(n, m, alpha, +1, ctx), what.str());
        }
        t.add(plus_quotients_at_one.size() == 100, "quotient collection incomplete");
        suite.report(10, "q = 1 specialization of each quotient matches the integer sum", t,
                     seconds_since(t0));
    }

    // 11. delannoy power-sum integrality sweep (empirical)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Tally t;
        for (long n = 1; n <= 40; ++n)
            for (long m = 1; m <= 3; ++m) {
                const auto r = explore_delannoy_power(n, m, ctx);
                t.add(r.status == Status::conjecture_pass, params_str(r));
            }
        suite.report(11, "delannoy power sums divisible by n (n<=40, m<=3, empirical)", t,
                     seconds_since(t0));
    }

    // 12. deterministic sweeps are byte-identical across runs and workers
    {
        const auto t0 = std::chrono::steady_clock::now();
        Tally t;
        const fs::path dir = fs::temp_directory_path() / "qapery_acceptance_determinism";
        fs::create_directories(dir);
        auto bytes_of = [&](const SweepSpec& spec) {
            SweepSpec s = spec;
            VerifyContext fresh;
            if (run_sweep(s, fresh) != kExitOk) return std::string{};
            return slurp(s.out_path);
        };
        SweepSpec t1;
        t1.theorem = TheoremId::T1E1;
        t1.ranges = {{"n", {1, 12}}, {"m", {1, 2}}, {"alpha", {1, 2}}};
        t1.sign = SignOpt::both;
        t1.deterministic = true;
        t1.out_path = (dir / "a.jsonl").string();
        const std::string first = bytes_of(t1);
        t1.out_path = (dir / "b.jsonl").string();
        const std::string second = bytes_of(t1);
        t1.out_path = (dir / "c.jsonl").string();
        t1.workers = 2;
        const std::string parallel = bytes_of(t1);
        t.add(!first.empty() && first == second, "integer sweep rerun differs");
        t.add(!first.empty() && first == parallel, "integer sweep with workers differs");

        SweepSpec qt;
        qt.theorem = TheoremId::QT_PLUS;
        qt.ranges = {{"n", {1, 8}}, {"m", {1, 2}}, {"alpha", {1, 2}}};
        qt.deterministic = true;
        qt.out_path = (dir / "qa.jsonl").string();
        const std::string qfirst = bytes_of(qt);
        qt.out_path = (dir / "qb.jsonl").string();
        const std::string qsecond = bytes_of(qt);
        t.add(!qfirst.empty() && qfirst == qsecond, "q sweep rerun differs");

        std::error_code ec;
        fs::remove_all(dir, ec);
        suite.report(12, "deterministic sweeps are byte-identical", t, seconds_since(t0));
    }

    if (!suite.all_ok()) {
        std::printf("ACCEPTANCE: FAIL\n");
        return 1;
    }
    std::printf("ACCEPTANCE: PASS\n");
    return 0;
}
