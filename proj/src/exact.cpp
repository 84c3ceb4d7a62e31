#include "derange/exact.hpp"

#include <algorithm>

namespace derange::exact {

Rational make_rational(Integer num, Integer den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

Integer floor_div(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::invalid_argument("floor_div: zero denominator");
    }
    // cpp_int division truncates toward zero; adjust when signs differ.
    Integer q = num / den;
    if (num % den != 0 && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

Integer rational_floor(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

Integer binomial(unsigned n, std::int64_t k) {
    if (k < 0 || k > static_cast<std::int64_t>(n)) {
        return 0;
    }
    // Multiplicative form over the shorter wing; every intermediate division
    // is exact because r holds C(n - kk + i, i) after step i.
    auto kk = static_cast<unsigned>(std::min<std::int64_t>(k, n - k));
    Integer r = 1;
    for (unsigned i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;
    }
    return r;
}

unsigned decimal_digit_estimate(const Integer& x) {
    if (x == 0) {
        return 1;
    }
    const std::size_t bits = msb(abs(x)) + 1;
    // bits * log10(2), rounded up a little.
    return static_cast<unsigned>(bits * 30103ULL / 100000ULL) + 1;
}

}  // namespace derange::exact
