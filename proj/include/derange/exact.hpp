#ifndef DERANGE_EXACT_HPP
#define DERANGE_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace derange::exact {

// Arbitrary-precision signed integer and reduced rational. All quantities in
// this library are exact; no floating point enters any decision path.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with the sign moved onto the numerator. Throws on den == 0.
Rational make_rational(Integer num, Integer den);

// Quotient rounded toward -infinity. Throws on den == 0.
Integer floor_div(const Integer& num, const Integer& den);

// Floor of a rational, toward -infinity.
Integer rational_floor(const Rational& q);

bool is_integer(const Rational& q);

// Exact n!; factorial(0) == 1.
Integer factorial(unsigned n);

// C(n, k); zero for k < 0 or k > n.
Integer binomial(unsigned n, std::int64_t k);

// Upper estimate of the decimal digit count of |x|, at least 1. Used to seed
// the adaptive precision schedule; only has to be in the right ballpark.
unsigned decimal_digit_estimate(const Integer& x);

}  // namespace derange::exact

#endif
