#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rascal {

// All triangle entries are exact arbitrary-precision integers; rule
// coefficients are exact rationals. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline Int to_integer(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

} // namespace rascal
