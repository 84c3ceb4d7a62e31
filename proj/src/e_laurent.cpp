#include "derange/e_laurent.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace derange::exact {

namespace {

constexpr unsigned kMinStartTerms = 32;

// Factorial-sized coefficients need precision proportional to their digit
// count, so the schedule starts there instead of crawling up from small K.
unsigned start_terms(const ELaurent& x) {
    unsigned digits = 1;
    digits = std::max(digits, decimal_digit_estimate(numerator(x.constant_part())));
    digits = std::max(digits, decimal_digit_estimate(numerator(x.e_part())));
    digits = std::max(digits, decimal_digit_estimate(numerator(x.e_inv_part())));
    return std::max(kMinStartTerms, digits);
}

}  // namespace

ELaurent::ELaurent(Rational constant, Rational e_coeff, Rational e_inv_coeff)
    : a_(std::move(constant)), b_(std::move(e_coeff)), c_(std::move(e_inv_coeff)) {}

ELaurent ELaurent::from_rational(Rational constant) {
    return ELaurent(std::move(constant), 0, 0);
}

ELaurent ELaurent::e_times(Rational coeff) {
    return ELaurent(0, std::move(coeff), 0);
}

ELaurent ELaurent::e_inv_times(Rational coeff) {
    return ELaurent(0, 0, std::move(coeff));
}

Interval ELaurent::enclosure(unsigned terms) const {
    Interval acc = Interval::point(a_);
    if (b_ != 0 || c_ != 0) {
        const Interval e = e_enclosure(terms);
        if (b_ != 0) {
            acc = acc + e.scaled(b_);
        }
        if (c_ != 0) {
            acc = acc + e.reciprocal().scaled(c_);
        }
    }
    return acc;
}

Integer ELaurent::floor() const {
    if (is_rational()) {
        return rational_floor(a_);
    }
    const unsigned cap = precision_cap();
    for (unsigned terms = start_terms(*this); terms <= cap; terms *= 2) {
        const Interval box = enclosure(terms);
        Integer lo_floor = rational_floor(box.lo());
        if (lo_floor == rational_floor(box.hi())) {
            return lo_floor;
        }
    }
    throw PrecisionExhausted("ELaurent::floor: enclosure did not resolve within the precision cap of " +
                             std::to_string(cap) + " terms");
}

Integer ELaurent::nearest() const {
    ELaurent shifted = *this;
    shifted.a_ += Rational(1, 2);
    return shifted.floor();
}

int ELaurent::sign() const {
    if (is_rational()) {
        const int s = a_.sign();
        return s;
    }
    const unsigned cap = precision_cap();
    for (unsigned terms = start_terms(*this); terms <= cap; terms *= 2) {
        const Interval box = enclosure(terms);
        if (box.lo() > 0) {
            return 1;
        }
        if (box.hi() < 0) {
            return -1;
        }
    }
    throw PrecisionExhausted("ELaurent::sign: enclosure did not resolve within the precision cap of " +
                             std::to_string(cap) + " terms");
}

ELaurent ELaurent::operator-() const {
    return ELaurent(-a_, -b_, -c_);
}

ELaurent operator+(const ELaurent& x, const ELaurent& y) {
    return ELaurent(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_);
}

ELaurent operator-(const ELaurent& x, const ELaurent& y) {
    return ELaurent(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_);
}

ELaurent operator*(const Rational& f, const ELaurent& x) {
    return ELaurent(f * x.a_, f * x.b_, f * x.c_);
}

ELaurent operator*(const ELaurent& x, const Rational& f) {
    return f * x;
}

std::string ELaurent::str() const {
    std::ostringstream out;
    out << a_ << " + " << b_ << "*e + " << c_ << "*e^-1";
    return out.str();
}

}  // namespace derange::exact
