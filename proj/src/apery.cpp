#include <qapery/apery.hpp>

#include <qapery/qcomb.hpp>

#include <stdexcept>
#include <utility>

namespace qapery {

namespace {
long binom2(long j) { return j * (j - 1) / 2; }
}   // namespace

IntXPoly apery_poly(long n, long alpha) {
    if (n < 0 || alpha < 1) throw std::invalid_argument("apery_poly: bad parameters");
    std::vector<Int> c(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] =
            int_pow(binomial(n, k) * binomial(n + k, k), static_cast<unsigned long>(alpha));
    return IntXPoly::from_coeffs(std::move(c));
}

IntXPoly delannoy_poly(long n) { return apery_poly(n, 1); }

XPoly q_apery_poly(long k, long alpha) {
    if (k < 0 || alpha < 1) throw std::invalid_argument("q_apery_poly: bad parameters");
    const auto e = static_cast<unsigned long>(alpha);
    std::vector<Laurent> c(static_cast<std::size_t>(k + 1));
    for (long j = 0; j <= k; ++j) {
        // The shift alpha*(C(j,2) - j*k) <= 0 is applied last so the heavy
        // products stay in ordinary polynomials.
        c[static_cast<std::size_t>(j)] =
            (q_binom(k, j).pow(e) * q_binom(k + j, j).pow(e)).shifted(alpha * (binom2(j) - j * k));
    }
    return XPoly::from_coeffs(std::move(c));
}

XPoly q_apery_poly_alt(long k, long alpha) {
    if (k < 0 || alpha < 1) throw std::invalid_argument("q_apery_poly_alt: bad parameters");
    const auto e = static_cast<unsigned long>(alpha);
    std::vector<Laurent> c(static_cast<std::size_t>(k + 1));
    for (long j = 0; j <= k; ++j) {
        Laurent term = (q_binom(k, j).pow(e) * q_binom(-k - 1, j).pow(e)).shifted(alpha * j * j);
        if ((alpha * j) % 2 != 0) term = -term;
        c[static_cast<std::size_t>(j)] = std::move(term);
    }
    return XPoly::from_coeffs(std::move(c));
}

XPoly b_poly(long a, long b, long d, long alpha) {
    if (a < 0 || d < 2 || b < 0 || b > d - 1 || alpha < 1)
        throw std::invalid_argument("b_poly: parameters out of range");
    const auto e = static_cast<unsigned long>(alpha);
    std::vector<Laurent> c(static_cast<std::size_t>(a * d + d));
    for (long t = 0; t < d; ++t) {
        const Laurent qpart =
            (q_binom(b, t).pow(e) * q_binom(d - b - 1, t).pow(e)).shifted(alpha * t * t);
        if (qpart.is_zero()) continue;
        for (long s = 0; s <= a; ++s) {
            // binom(-a-1, s) = (-1)^s binom(a+s, s)
            Int ipart = int_pow(binomial(a, s) * binomial(a + s, s), e);
            if ((e * static_cast<unsigned long>(s)) % 2 != 0) ipart = -ipart;
            if ((alpha * (s * d + t)) % 2 != 0) ipart = -ipart;
            c[static_cast<std::size_t>(s * d + t)] = qpart * Laurent(std::move(ipart));
        }
    }
    return XPoly::from_coeffs(std::move(c));
}

const Int& EtaCoefficients::at(long n) const {
    if (n < 1 || n > limit) throw std::out_of_range("EtaCoefficients::at");
    return a[static_cast<std::size_t>(n)];
}

EtaCoefficients eta_product_coeffs(long limit) {
    if (limit < 1) throw std::invalid_argument("eta_product_coeffs: limit must be >= 1");
    EtaCoefficients out;
    out.limit = limit;
    out.a.assign(static_cast<std::size_t>(limit + 1), Int(0));
    out.a[1] = 1;   // the leading q of the product
    // Multiply by (1 - q^step)^4 for step = 2n and 4n; factors with
    // step > limit cannot affect the truncation.
    for (long base : {2L, 4L}) {
        for (long step = base; step <= limit; step += base) {
            for (int rep = 0; rep < 4; ++rep) {
                for (long i = limit; i >= step + 1; --i)
                    out.a[static_cast<std::size_t>(i)] -= out.a[static_cast<std::size_t>(i - step)];
            }
        }
    }
    return out;
}

std::shared_ptr<const IntXPoly> PowerCache::int_power(long k, long alpha, long m) {
    const Key key{k, alpha, m};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto hit = int_table_.find(key);
        if (hit != int_table_.end()) return hit->second;
    }
    auto value = std::make_shared<const IntXPoly>(
        apery_poly(k, alpha).pow(static_cast<unsigned long>(m)));
    std::lock_guard<std::mutex> lock(mu_);
    return int_table_.try_emplace(key, std::move(value)).first->second;
}

std::shared_ptr<const XPoly> PowerCache::q_power(long k, long alpha, long m) {
    const Key key{k, alpha, m};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto hit = q_table_.find(key);
        if (hit != q_table_.end()) return hit->second;
    }
    auto value = std::make_shared<const XPoly>(
        q_apery_poly(k, alpha).pow(static_cast<unsigned long>(m)));
    std::lock_guard<std::mutex> lock(mu_);
    return q_table_.try_emplace(key, std::move(value)).first->second;
}

}  // namespace qapery
