#ifndef DSTAB_RATIONAL_HPP
#define DSTAB_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dstab {

// All scalar arithmetic in the library is exact. No floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p" or "p/q" with optional leading '-', nothing else (no floats).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed rational: " + s);
    bool slash = false;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] == '/') {
            if (slash || j == i || j + 1 == s.size())
                throw std::invalid_argument("malformed rational: " + s);
            slash = true;
            continue;
        }
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("malformed rational: " + s);
    }
    Rational r(s);
    r.canonicalize();
    return r;
}

inline std::string rational_string(const Rational& r) { return r.get_str(); }

inline Rational rational_pow(const Rational& base, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace dstab

#endif
