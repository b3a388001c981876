#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ncch {

// Exact arbitrary-precision scalars. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the canonical form
// the rest of the library relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rational(std::int64_t num, std::int64_t den = 1)
{
    return Rational(Int(num), Int(den));
}

inline Int factorial(int n)
{
    Int r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& q)
{
    const Int den = denominator_of(q);
    std::string s = numerator_of(q).str();
    if (den != 1)
        s += "/" + den.str();
    return s;
}

} // namespace ncch
