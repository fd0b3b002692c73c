#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hessex {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Domain errors carry the violated precondition in the message.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal invariant violations (never expected on valid input).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline std::string to_string(const Int& v) { return v.str(); }

// "p" or "p/q"; q always positive.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw DomainError("rational denominator must be nonzero");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw DomainError("cannot parse rational: '" + s + "'");
    }
}

} // namespace hessex
