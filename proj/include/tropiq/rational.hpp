#ifndef TROPIQ_RATIONAL_HPP
#define TROPIQ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace tropiq {

// Arbitrary-precision exact arithmetic. cpp_rational keeps values
// canonical: reduced fraction, positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Render as "p/q", or "p" when the denominator is one.
inline std::string rational_to_string(const Rational& r) {
    Int num = rational_num(r);
    Int den = rational_den(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parse "p" or "p/q" with optional sign. Throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational '" + s + "': " + e.what());
    }
}

} // namespace tropiq

#endif
