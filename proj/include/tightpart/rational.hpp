#ifndef TIGHTPART_RATIONAL_HPP
#define TIGHTPART_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tightpart {

// All bound arithmetic is exact; floating point is banned from comparisons.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

// Accepts "p" or "p/q" with optional sign on p.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

inline std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) out << '/' << r.denominator();
    return out.str();
}

inline BigInt ceil_of(const Rational& r) {
    BigInt q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r > 0) ++q;
    return q;
}

inline long long ceil_ll(const Rational& r) { return ceil_of(r).convert_to<long long>(); }

}  // namespace tightpart

#endif
