#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "cubica/errors.hpp"

namespace cubica {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar.  cpp_rational keeps values in lowest terms with a
// strictly positive denominator, so equality is syntactic.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

// Wire format is always "p/q", q > 0, gcd(p, q) = 1 (so 3 prints as "3/1").
inline std::string to_wire(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw ParseError("zero denominator in rational '" + s + "'");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        return Rational(p, q);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + s + "'");
    }
}

}  // namespace cubica
