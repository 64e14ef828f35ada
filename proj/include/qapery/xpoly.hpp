#pragma once

#include <qapery/laurent.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace qapery {

class XPoly;

/// Polynomial in x with Int coefficients; the q = 1 shadow of XPoly and the
/// value type of the integer-side power sums.
class IntXPoly {
public:
    IntXPoly() = default;
    IntXPoly(Int c);   // NOLINT
    IntXPoly(long c) : IntXPoly(Int(c)) {}

    /// coeffs[k] multiplies x^k; trailing zeros are trimmed.
    static IntXPoly from_coeffs(std::vector<Int> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Int coeff(long k) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int eval(const Int& x) const;

    IntXPoly operator-() const;
    friend IntXPoly operator+(const IntXPoly& f, const IntXPoly& g);
    friend IntXPoly operator-(const IntXPoly& f, const IntXPoly& g);
    friend IntXPoly operator*(const IntXPoly& f, const IntXPoly& g);
    IntXPoly& operator+=(const IntXPoly& g);
    IntXPoly& operator-=(const IntXPoly& g);
    IntXPoly& operator*=(const IntXPoly& g);

    IntXPoly scaled(const Int& c) const;
    /// *this += c * f, in place.
    void add_scaled(const IntXPoly& f, const Int& c);
    /// p^e by sequential multiplication (exponents here are tiny).
    IntXPoly pow(unsigned long e) const;

    bool operator==(const IntXPoly&) const = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const IntXPoly& f);

private:
    std::vector<Int> coeffs_;
    void trim();
};

/// Polynomial in x whose coefficients are Laurent polynomials in q.
class XPoly {
public:
    XPoly() = default;
    XPoly(Laurent c);   // NOLINT

    /// coeffs[k] multiplies x^k; trailing zero coefficients are trimmed.
    static XPoly from_coeffs(std::vector<Laurent> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Laurent& coeff(long k) const;
    const std::vector<Laurent>& coeffs() const { return coeffs_; }

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& f, const XPoly& g);
    friend XPoly operator-(const XPoly& f, const XPoly& g);
    friend XPoly operator*(const XPoly& f, const XPoly& g);
    XPoly& operator+=(const XPoly& g);
    XPoly& operator-=(const XPoly& g);
    XPoly& operator*=(const XPoly& g);

    /// Multiply every coefficient by c.
    XPoly scaled(const Laurent& c) const;
    /// Multiply every coefficient by q^s.
    XPoly shifted_q(long s) const;
    /// q -> q^2 in every coefficient.
    XPoly subst_q_squared() const;
    /// p^e by sequential multiplication.
    XPoly pow(unsigned long e) const;

    /// Coefficient-wise value at q = 1.
    IntXPoly eval_one() const;

    bool operator==(const XPoly&) const = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const XPoly& f);

private:
    std::vector<Laurent> coeffs_;
    void trim();
};

struct XPolyDivision {
    bool divisible = false;
    /// Quotient H with p = g*H; meaningful only if divisible.
    XPoly quotient;
    /// On failure, the lowest x-degree whose coefficient is not divisible and
    /// the nonzero remainder of that coefficient's cleared division.
    long witness_degree = -1;
    IntPoly witness_remainder;
};

/// Divide every x-coefficient of p by the monic divisor g (g(0) != 0),
/// stopping at the first coefficient that is not divisible.
XPolyDivision divide_by_monic(const XPoly& p, const IntPoly& g);

/// True iff every x-coefficient of p is divisible by g.
bool is_divisible(const XPoly& p, const IntPoly& g);

}  // namespace qapery
