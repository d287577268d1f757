#ifndef DSTAB_DELTA_POLY_HPP
#define DSTAB_DELTA_POLY_HPP

#include "dstab/rational.hpp"

#include <map>
#include <string>

namespace dstab {

// Polynomial in the loop parameter with exact rational coefficients and
// nonnegative exponents.  Zero coefficients are never stored.
class DeltaPolynomial {
public:
    DeltaPolynomial() = default;
    DeltaPolynomial(const Rational& c) { // implicit: constants promote
        if (c != 0) coeffs_[0] = c;
    }
    DeltaPolynomial(int c) : DeltaPolynomial(Rational(c)) {}

    static DeltaPolynomial monomial(int exponent, const Rational& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Rational>& terms() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;

    DeltaPolynomial& operator+=(const DeltaPolynomial& o);
    DeltaPolynomial& operator-=(const DeltaPolynomial& o);
    friend DeltaPolynomial operator+(DeltaPolynomial a, const DeltaPolynomial& b) {
        a += b;
        return a;
    }
    friend DeltaPolynomial operator-(DeltaPolynomial a, const DeltaPolynomial& b) {
        a -= b;
        return a;
    }
    DeltaPolynomial operator*(const DeltaPolynomial& o) const;
    DeltaPolynomial operator-() const;

    bool operator==(const DeltaPolynomial& o) const = default;

private:
    std::map<int, Rational> coeffs_; // exponent -> nonzero coefficient
};

// Canonical text form, ascending exponents, variable "d": "0", "1",
// "-3/2*d^2", "1 - d + 2*d^4".  Coefficients of magnitude one drop the
// "1*"; exponent one drops the "^1".
std::string poly_string(const DeltaPolynomial& p);

// Strict inverse of poly_string (term order and "d^1" are tolerated).
// Throws std::invalid_argument on anything else.
DeltaPolynomial parse_poly(const std::string& text);

} // namespace dstab

#endif
