#pragma once

#include <qapery/bigint.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace qapery {

/// Laurent polynomial in q with Int coefficients.
///
/// Stored as a dense coefficient block plus the exponent of its first entry,
/// so q^-3 + 2*q^-1 is {offset: -3, coeffs: [1, 0, 2]}. Canonical form keeps
/// the first and last stored entries nonzero; the zero polynomial is the
/// unique empty block with offset 0. Values are immutable after construction
/// and equal values have equal representations.
class Laurent {
public:
    Laurent() = default;
    Laurent(Int c);   // NOLINT: constants convert implicitly
    Laurent(long c) : Laurent(Int(c)) {}

    static Laurent monomial(Int c, long exp);
    /// coeffs[i] multiplies q^(offset+i); trailing/leading zeros are trimmed.
    static Laurent from_coeffs(long offset, std::vector<Int> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    /// Exponent of the lowest (highest) nonzero term; 0 for the zero value.
    long min_exp() const { return offset_; }
    long max_exp() const { return offset_ + static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of q^exp (zero outside the stored block).
    Int coeff(long exp) const;
    long term_span() const { return static_cast<long>(coeffs_.size()); }

    long offset() const { return offset_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Multiply by q^s.
    Laurent shifted(long s) const;
    /// q -> q^2 (every exponent doubles, coefficients unchanged).
    Laurent subst_q_squared() const;
    /// Value at q = 1, i.e. the coefficient sum.
    Int eval_one() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& g);
    Laurent& operator-=(const Laurent& g);
    Laurent& operator*=(const Laurent& g);
    friend Laurent operator+(const Laurent& f, const Laurent& g);
    friend Laurent operator-(const Laurent& f, const Laurent& g);
    friend Laurent operator*(const Laurent& f, const Laurent& g);

    /// f^e by repeated squaring; f^0 = 1 for every f, including 0.
    Laurent pow(unsigned long e) const;

    bool operator==(const Laurent&) const = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Laurent& f);

private:
    long offset_ = 0;
    std::vector<Int> coeffs_;
    void trim();
    friend class LaurentAcc;
};

/// Mutable accumulator for building Laurent sums of shifted products without
/// per-term temporaries. The hot loops of the power-sum verifiers run here.
class LaurentAcc {
public:
    /// += q^shift * a * b
    void add_product(const Laurent& a, const Laurent& b, long shift = 0);
    /// += q^shift * a, optionally scaled by an integer.
    void add_term(const Laurent& a, long shift = 0);
    void add_term_scaled(const Laurent& a, const Int& scale, long shift = 0);
    bool empty() const { return coeffs_.empty(); }
    /// Normalize and move the value out, leaving the accumulator empty.
    Laurent take();

private:
    long offset_ = 0;
    std::vector<Int> coeffs_;
    void ensure_span(long lo, long hi);
};

/// Ordinary polynomial in q over Int (a Laurent value with offset >= 0),
/// stored densely from the constant term. This is the divisor type of every
/// modular reduction: cyclotomics, q-integers and their products, all monic.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(Int c);   // NOLINT
    IntPoly(long c) : IntPoly(Int(c)) {}

    /// coeffs[i] multiplies q^i; trailing zeros are trimmed.
    static IntPoly from_coeffs(std::vector<Int> coeffs);
    /// Conversion from a Laurent value; requires min_exp() >= 0.
    static IntPoly from_laurent(const Laurent& f);
    Laurent to_laurent() const;

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Int coeff(long i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& lead() const;
    Int constant_term() const;
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    Int eval_one() const;

    IntPoly& operator*=(const IntPoly& g);
    friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator+(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator-(const IntPoly& f, const IntPoly& g);

    bool operator==(const IntPoly&) const = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const IntPoly& f);

private:
    std::vector<Int> coeffs_;
    void trim();
};

struct DivRem {
    IntPoly quot;
    IntPoly rem;
};

/// Long division f = quot*g + rem with deg rem < deg g. The divisor must be
/// monic of degree >= 1, which keeps every coefficient an integer.
/// Throws std::invalid_argument otherwise.
DivRem divrem_monic(const IntPoly& f, const IntPoly& g);

struct LaurentDivision {
    bool divisible = false;
    /// Laurent quotient with f = g * quotient; meaningful only if divisible.
    Laurent quotient;
    /// Remainder of the cleared division q^N*f = g*h + rem (N the shift that
    /// clears negative exponents); zero exactly when divisible.
    IntPoly remainder;
};

/// Divide a Laurent value by a monic divisor with nonzero constant term.
/// Negative exponents are cleared by multiplying with q^N first; since
/// g(0) != 0 makes q a unit modulo g, this does not change divisibility.
/// g == 1 is accepted and divides everything. Throws std::invalid_argument
/// if g is not monic or g(0) == 0.
LaurentDivision divide_by_monic(const Laurent& f, const IntPoly& g);

/// True iff f = g*h for some Laurent h with integer coefficients.
bool is_divisible(const Laurent& f, const IntPoly& g);

/// Exact quotient f/g. A nonzero remainder is an invariant violation and
/// throws std::logic_error; use divide_by_monic when failure is expected.
Laurent divexact(const Laurent& f, const IntPoly& g);

}  // namespace qapery
