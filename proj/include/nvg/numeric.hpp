#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nvg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRational& q) { return boost::multiprecision::denominator(q); }

// cpp_rational keeps values in lowest terms with positive denominator.
inline bool is_integer(const BigRational& q) { return den(q) == 1; }

}  // namespace nvg
