#include "dstab/delta_poly.hpp"

#include <cctype>
#include <stdexcept>

namespace dstab {

DeltaPolynomial DeltaPolynomial::monomial(int exponent, const Rational& c) {
    if (exponent < 0)
        throw std::invalid_argument("monomial: negative exponent");
    DeltaPolynomial p;
    if (c != 0) p.coeffs_[exponent] = c;
    return p;
}

Rational DeltaPolynomial::evaluate(const Rational& x) const {
    // Horner over the sparse terms, highest exponent first
    Rational acc = 0;
    int at = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!(acc == 0))
            acc *= rational_pow(x, unsigned(at - it->first));
        acc += it->second;
        at = it->first;
    }
    if (!(acc == 0)) acc *= rational_pow(x, unsigned(at));
    return acc;
}

DeltaPolynomial& DeltaPolynomial::operator+=(const DeltaPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) {
        Rational& slot = coeffs_[e];
        slot += c;
        if (slot == 0) coeffs_.erase(e);
    }
    return *this;
}

DeltaPolynomial& DeltaPolynomial::operator-=(const DeltaPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) {
        Rational& slot = coeffs_[e];
        slot -= c;
        if (slot == 0) coeffs_.erase(e);
    }
    return *this;
}

DeltaPolynomial DeltaPolynomial::operator*(const DeltaPolynomial& o) const {
    DeltaPolynomial out;
    for (const auto& [e1, c1] : coeffs_) {
        for (const auto& [e2, c2] : o.coeffs_) {
            Rational& slot = out.coeffs_[e1 + e2];
            slot += c1 * c2;
            if (slot == 0) out.coeffs_.erase(e1 + e2);
        }
    }
    return out;
}

DeltaPolynomial DeltaPolynomial::operator-() const {
    DeltaPolynomial out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
    return out;
}

std::string poly_string(const DeltaPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (e == 0) {
            out += rational_string(mag);
        } else {
            if (mag != 1) out += rational_string(mag) + "*";
            out += e == 1 ? "d" : "d^" + std::to_string(e);
        }
    }
    return out;
}

DeltaPolynomial parse_poly(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&]() -> void {
        throw std::invalid_argument("parse_poly: malformed polynomial \"" +
                                    text + "\"");
    };
    auto skip_spaces = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    auto parse_uint = [&]() -> int {
        if (i >= text.size() || !std::isdigit(unsigned(text[i]))) fail();
        long v = 0;
        while (i < text.size() && std::isdigit(unsigned(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000) fail(); // exponents never get near this
            ++i;
        }
        return int(v);
    };

    DeltaPolynomial out;
    if (text.empty()) fail();
    bool negative = false;
    if (text[i] == '-') {
        negative = true;
        ++i;
    }
    for (;;) {
        // one term: rational, "d[^k]", or rational "*" "d[^k]"
        Rational coeff = 1;
        bool saw_coeff = false;
        if (i < text.size() && std::isdigit(unsigned(text[i]))) {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isdigit(unsigned(text[i])) || text[i] == '/'))
                ++i;
            coeff = parse_rational(text.substr(start, i - start));
            saw_coeff = true;
        }
        int exponent = 0;
        bool saw_d = false;
        if (saw_coeff && i < text.size() && text[i] == '*') {
            ++i;
            if (i >= text.size() || text[i] != 'd') fail();
        }
        if (i < text.size() && text[i] == 'd') {
            ++i;
            saw_d = true;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                exponent = parse_uint();
                if (exponent < 1) fail();
            }
        }
        if (!saw_coeff && !saw_d) fail();
        out += DeltaPolynomial::monomial(exponent,
                                         negative ? Rational(-coeff) : coeff);

        skip_spaces();
        if (i == text.size()) break;
        if (text[i] == '+')
            negative = false;
        else if (text[i] == '-')
            negative = true;
        else
            fail();
        ++i;
        skip_spaces();
        if (i == text.size()) fail();
    }
    return out;
}

} // namespace dstab
