#include <qapery/laurent.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qapery {

// ---------------------------------------------------------------- Laurent

Laurent::Laurent(Int c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

Laurent Laurent::monomial(Int c, long exp) {
    Laurent f;
    if (c != 0) {
        f.offset_ = exp;
        f.coeffs_.push_back(std::move(c));
    }
    return f;
}

Laurent Laurent::from_coeffs(long offset, std::vector<Int> coeffs) {
    Laurent f;
    f.offset_ = offset;
    f.coeffs_ = std::move(coeffs);
    f.trim();
    return f;
}

void Laurent::trim() {
    std::size_t lo = 0;
    std::size_t hi = coeffs_.size();
    while (lo < hi && coeffs_[lo] == 0) ++lo;
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    if (lo == hi) {
        coeffs_.clear();
        offset_ = 0;
        return;
    }
    if (hi != coeffs_.size()) coeffs_.resize(hi);
    if (lo != 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
        offset_ += static_cast<long>(lo);
    }
}

Int Laurent::coeff(long exp) const {
    if (is_zero() || exp < min_exp() || exp > max_exp()) return Int(0);
    return coeffs_[static_cast<std::size_t>(exp - offset_)];
}

Laurent Laurent::shifted(long s) const {
    Laurent f(*this);
    if (!f.is_zero()) f.offset_ += s;
    return f;
}

Laurent Laurent::subst_q_squared() const {
    if (is_zero()) return {};
    Laurent f;
    f.offset_ = 2 * offset_;
    f.coeffs_.assign(2 * coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) f.coeffs_[2 * i] = coeffs_[i];
    return f;
}

Int Laurent::eval_one() const {
    Int s(0);
    for (const Int& c : coeffs_) s += c;
    return s;
}

Laurent Laurent::operator-() const {
    Laurent f(*this);
    for (Int& c : f.coeffs_) c = -c;
    return f;
}

Laurent operator+(const Laurent& f, const Laurent& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const long lo = std::min(f.min_exp(), g.min_exp());
    const long hi = std::max(f.max_exp(), g.max_exp());
    Laurent r;
    r.offset_ = lo;
    r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        r.coeffs_[static_cast<std::size_t>(f.offset_ - lo) + i] = f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i)
        r.coeffs_[static_cast<std::size_t>(g.offset_ - lo) + i] += g.coeffs_[i];
    r.trim();
    return r;
}

Laurent operator-(const Laurent& f, const Laurent& g) { return f + (-g); }

Laurent operator*(const Laurent& f, const Laurent& g) {
    if (f.is_zero() || g.is_zero()) return {};
    Laurent r;
    r.offset_ = f.offset_ + g.offset_;
    r.coeffs_.assign(f.coeffs_.size() + g.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            mpz_addmul(r.coeffs_[i + j].get_mpz_t(), f.coeffs_[i].get_mpz_t(),
                       g.coeffs_[j].get_mpz_t());
        }
    }
    r.trim();
    return r;
}

Laurent& Laurent::operator+=(const Laurent& g) { return *this = *this + g; }
Laurent& Laurent::operator-=(const Laurent& g) { return *this = *this - g; }
Laurent& Laurent::operator*=(const Laurent& g) { return *this = *this * g; }

Laurent Laurent::pow(unsigned long e) const {
    Laurent result(Int(1));
    Laurent base(*this);
    while (e != 0) {
        if (e & 1UL) result *= base;
        e >>= 1UL;
        if (e != 0) base *= base;
    }
    return result;
}

std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = min_exp(); e <= max_exp(); ++e) {
        const Int& c = coeffs_[static_cast<std::size_t>(e - offset_)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& f) { return os << f.str(); }

// ------------------------------------------------------------- LaurentAcc

void LaurentAcc::ensure_span(long lo, long hi) {
    if (coeffs_.empty()) {
        offset_ = lo;
        coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Int(0));
        return;
    }
    const long cur_hi = offset_ + static_cast<long>(coeffs_.size()) - 1;
    if (lo < offset_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_ - lo), Int(0));
        offset_ = lo;
    }
    if (hi > cur_hi) coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(hi - cur_hi), Int(0));
}

void LaurentAcc::add_product(const Laurent& a, const Laurent& b, long shift) {
    if (a.is_zero() || b.is_zero()) return;
    const long lo = a.min_exp() + b.min_exp() + shift;
    ensure_span(lo, a.max_exp() + b.max_exp() + shift);
    Int* dst = coeffs_.data() + (lo - offset_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(dst[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[j].get_mpz_t());
        }
    }
}

void LaurentAcc::add_term(const Laurent& a, long shift) {
    if (a.is_zero()) return;
    const long lo = a.min_exp() + shift;
    ensure_span(lo, a.max_exp() + shift);
    Int* dst = coeffs_.data() + (lo - offset_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) dst[i] += a.coeffs_[i];
}

void LaurentAcc::add_term_scaled(const Laurent& a, const Int& scale, long shift) {
    if (a.is_zero() || scale == 0) return;
    const long lo = a.min_exp() + shift;
    ensure_span(lo, a.max_exp() + shift);
    Int* dst = coeffs_.data() + (lo - offset_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        mpz_addmul(dst[i].get_mpz_t(), a.coeffs_[i].get_mpz_t(), scale.get_mpz_t());
}

Laurent LaurentAcc::take() {
    Laurent f = Laurent::from_coeffs(offset_, std::move(coeffs_));
    coeffs_.clear();
    offset_ = 0;
    return f;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(Int c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

IntPoly IntPoly::from_coeffs(std::vector<Int> coeffs) {
    IntPoly f;
    f.coeffs_ = std::move(coeffs);
    f.trim();
    return f;
}

IntPoly IntPoly::from_laurent(const Laurent& f) {
    if (f.is_zero()) return {};
    if (f.min_exp() < 0)
        throw std::invalid_argument("IntPoly::from_laurent: negative exponent");
    std::vector<Int> c(static_cast<std::size_t>(f.max_exp() + 1), Int(0));
    for (long e = f.min_exp(); e <= f.max_exp(); ++e) c[static_cast<std::size_t>(e)] = f.coeff(e);
    return from_coeffs(std::move(c));
}

Laurent IntPoly::to_laurent() const { return Laurent::from_coeffs(0, coeffs_); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::coeff(long i) const {
    if (i < 0 || i > degree()) return Int(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

const Int& IntPoly::lead() const {
    if (is_zero()) throw std::logic_error("IntPoly::lead on zero polynomial");
    return coeffs_.back();
}

Int IntPoly::constant_term() const { return coeff(0); }

Int IntPoly::eval_one() const {
    Int s(0);
    for (const Int& c : coeffs_) s += c;
    return s;
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Int> r(f.coeffs_.size() + g.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), f.coeffs_[i].get_mpz_t(), g.coeffs_[j].get_mpz_t());
    }
    return IntPoly::from_coeffs(std::move(r));
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    std::vector<Int> r(std::max(f.coeffs_.size(), g.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) r[i] = f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) r[i] += g.coeffs_[i];
    return IntPoly::from_coeffs(std::move(r));
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    std::vector<Int> r(std::max(f.coeffs_.size(), g.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) r[i] = f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) r[i] -= g.coeffs_[i];
    return IntPoly::from_coeffs(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& g) { return *this = *this * g; }

std::string IntPoly::str() const { return to_laurent().str(); }

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << f.str(); }

// ---------------------------------------------------------------- division

DivRem divrem_monic(const IntPoly& f, const IntPoly& g) {
    if (!g.is_monic()) throw std::invalid_argument("divrem_monic: divisor not monic");
    if (g.degree() < 1) throw std::invalid_argument("divrem_monic: constant divisor");
    const long dg = g.degree();
    const long df = f.degree();
    if (df < dg) return {IntPoly(), f};
    std::vector<Int> rem = f.coeffs();
    std::vector<Int> quot(static_cast<std::size_t>(df - dg + 1), Int(0));
    for (long i = df; i >= dg; --i) {
        Int& c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (long j = 0; j < dg; ++j) {
            mpz_submul(rem[static_cast<std::size_t>(i - dg + j)].get_mpz_t(), c.get_mpz_t(),
                       g.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
        }
        quot[static_cast<std::size_t>(i - dg)] = std::move(c);
        rem[static_cast<std::size_t>(i)] = 0;
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {IntPoly::from_coeffs(std::move(quot)), IntPoly::from_coeffs(std::move(rem))};
}

LaurentDivision divide_by_monic(const Laurent& f, const IntPoly& g) {
    if (!g.is_monic()) throw std::invalid_argument("divide_by_monic: divisor not monic");
    if (g.constant_term() == 0)
        throw std::invalid_argument("divide_by_monic: divisor has zero constant term");
    LaurentDivision out;
    if (f.is_zero()) {
        out.divisible = true;
        return out;
    }
    if (g.degree() == 0) {   // g == 1
        out.divisible = true;
        out.quotient = f;
        return out;
    }
    const long clear = std::max(0L, -f.min_exp());
    DivRem dr = divrem_monic(IntPoly::from_laurent(f.shifted(clear)), g);
    out.divisible = dr.rem.is_zero();
    out.remainder = std::move(dr.rem);
    if (out.divisible) out.quotient = dr.quot.to_laurent().shifted(-clear);
    return out;
}

bool is_divisible(const Laurent& f, const IntPoly& g) { return divide_by_monic(f, g).divisible; }

Laurent divexact(const Laurent& f, const IntPoly& g) {
    LaurentDivision d = divide_by_monic(f, g);
    if (!d.divisible) throw std::logic_error("divexact: nonzero remainder");
    return std::move(d.quotient);
}

}  // namespace qapery
