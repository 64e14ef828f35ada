#include <qapery/xpoly.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace qapery {

// --------------------------------------------------------------- IntXPoly

IntXPoly::IntXPoly(Int c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

IntXPoly IntXPoly::from_coeffs(std::vector<Int> coeffs) {
    IntXPoly f;
    f.coeffs_ = std::move(coeffs);
    f.trim();
    return f;
}

void IntXPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntXPoly::coeff(long k) const {
    if (k < 0 || k > degree()) return Int(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Int IntXPoly::eval(const Int& x) const {
    Int v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
}

IntXPoly IntXPoly::operator-() const {
    IntXPoly f(*this);
    for (Int& c : f.coeffs_) c = -c;
    return f;
}

IntXPoly operator+(const IntXPoly& f, const IntXPoly& g) {
    std::vector<Int> r(std::max(f.coeffs_.size(), g.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) r[i] = f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) r[i] += g.coeffs_[i];
    return IntXPoly::from_coeffs(std::move(r));
}

IntXPoly operator-(const IntXPoly& f, const IntXPoly& g) { return f + (-g); }

IntXPoly operator*(const IntXPoly& f, const IntXPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Int> r(f.coeffs_.size() + g.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), f.coeffs_[i].get_mpz_t(), g.coeffs_[j].get_mpz_t());
    }
    return IntXPoly::from_coeffs(std::move(r));
}

IntXPoly& IntXPoly::operator+=(const IntXPoly& g) { return *this = *this + g; }
IntXPoly& IntXPoly::operator-=(const IntXPoly& g) { return *this = *this - g; }
IntXPoly& IntXPoly::operator*=(const IntXPoly& g) { return *this = *this * g; }

IntXPoly IntXPoly::scaled(const Int& c) const {
    if (c == 0) return {};
    IntXPoly f(*this);
    for (Int& v : f.coeffs_) v *= c;
    return f;
}

void IntXPoly::add_scaled(const IntXPoly& f, const Int& c) {
    if (f.is_zero() || c == 0) return;
    if (coeffs_.size() < f.coeffs_.size()) coeffs_.resize(f.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        mpz_addmul(coeffs_[i].get_mpz_t(), f.coeffs_[i].get_mpz_t(), c.get_mpz_t());
    trim();
}

IntXPoly IntXPoly::pow(unsigned long e) const {
    IntXPoly r(Int(1));
    for (unsigned long i = 0; i < e; ++i) r *= *this;
    return r;
}

std::string IntXPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (os.tellp() > 0) os << " + ";
        os << coeffs_[k].get_str();
        if (k > 0) os << "*x^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntXPoly& f) { return os << f.str(); }

// ------------------------------------------------------------------ XPoly

XPoly::XPoly(Laurent c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

XPoly XPoly::from_coeffs(std::vector<Laurent> coeffs) {
    XPoly f;
    f.coeffs_ = std::move(coeffs);
    f.trim();
    return f;
}

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Laurent& XPoly::coeff(long k) const {
    static const Laurent zero;
    if (k < 0 || k > degree()) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

XPoly XPoly::operator-() const {
    XPoly f(*this);
    for (Laurent& c : f.coeffs_) c = -c;
    return f;
}

XPoly operator+(const XPoly& f, const XPoly& g) {
    std::vector<Laurent> r(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) r[i] = f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) r[i] += g.coeffs_[i];
    return XPoly::from_coeffs(std::move(r));
}

XPoly operator-(const XPoly& f, const XPoly& g) { return f + (-g); }

XPoly operator*(const XPoly& f, const XPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<LaurentAcc> acc(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
            acc[i + j].add_product(f.coeffs_[i], g.coeffs_[j]);
    }
    std::vector<Laurent> r(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) r[k] = acc[k].take();
    return XPoly::from_coeffs(std::move(r));
}

XPoly& XPoly::operator+=(const XPoly& g) { return *this = *this + g; }
XPoly& XPoly::operator-=(const XPoly& g) { return *this = *this - g; }
XPoly& XPoly::operator*=(const XPoly& g) { return *this = *this * g; }

XPoly XPoly::scaled(const Laurent& c) const {
    if (c.is_zero()) return {};
    XPoly f(*this);
    for (Laurent& v : f.coeffs_) v *= c;
    return f;
}

XPoly XPoly::shifted_q(long s) const {
    XPoly f(*this);
    for (Laurent& v : f.coeffs_) v = v.shifted(s);
    return f;
}

XPoly XPoly::subst_q_squared() const {
    XPoly f(*this);
    for (Laurent& v : f.coeffs_) v = v.subst_q_squared();
    return f;
}

XPoly XPoly::pow(unsigned long e) const {
    XPoly r{Laurent(1)};
    for (unsigned long i = 0; i < e; ++i) r *= *this;
    return r;
}

IntXPoly XPoly::eval_one() const {
    std::vector<Int> r(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i].eval_one();
    return IntXPoly::from_coeffs(std::move(r));
}

std::string XPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (os.tellp() > 0) os << " + ";
        os << "(" << coeffs_[k].str() << ")";
        if (k > 0) os << "*x^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const XPoly& f) { return os << f.str(); }

XPolyDivision divide_by_monic(const XPoly& p, const IntPoly& g) {
    XPolyDivision out;
    std::vector<Laurent> quot(p.coeffs().size());
    for (long k = 0; k <= p.degree(); ++k) {
        LaurentDivision d = divide_by_monic(p.coeff(k), g);
        if (!d.divisible) {
            out.divisible = false;
            out.witness_degree = k;
            out.witness_remainder = std::move(d.remainder);
            return out;
        }
        quot[static_cast<std::size_t>(k)] = std::move(d.quotient);
    }
    out.divisible = true;
    out.quotient = XPoly::from_coeffs(std::move(quot));
    return out;
}

bool is_divisible(const XPoly& p, const IntPoly& g) { return divide_by_monic(p, g).divisible; }

}  // namespace qapery
