#ifndef DERANGE_E_LAURENT_HPP
#define DERANGE_E_LAURENT_HPP

#include "derange/enclosure.hpp"

namespace derange::exact {

// Exact number a + b*e + c*e^-1 with rational coefficients. Since 1, e and
// e^-1 are linearly independent over the rationals, the triple represents its
// value uniquely and coefficient equality decides value equality. Floors,
// nearest integers and signs of irrational values are resolved through
// rational enclosures of e refined on a doubling schedule.
class ELaurent {
  public:
    ELaurent() = default;
    ELaurent(Rational constant, Rational e_coeff, Rational e_inv_coeff);

    static ELaurent from_rational(Rational constant);
    static ELaurent e_times(Rational coeff);
    static ELaurent e_inv_times(Rational coeff);

    const Rational& constant_part() const { return a_; }
    const Rational& e_part() const { return b_; }
    const Rational& e_inv_part() const { return c_; }

    bool is_rational() const { return b_ == 0 && c_ == 0; }

    // Conservative enclosure of the value from `terms` series terms for e.
    // Rational contributions enter exactly, so a rational input yields a
    // width-zero interval.
    Interval enclosure(unsigned terms) const;

    // Exact floor toward -infinity. Rational inputs are floored directly;
    // otherwise the enclosure is refined until both endpoints share a floor.
    // Throws PrecisionExhausted if the precision cap is hit.
    Integer floor() const;

    // Integer nearest to the value, computed as floor(x + 1/2). Rational
    // inputs with fractional part exactly 1/2 round up; irrational inputs
    // never sit halfway.
    Integer nearest() const;

    // -1, 0 or +1. Irrational values are certified by enclosure refinement.
    int sign() const;

    ELaurent operator-() const;
    friend ELaurent operator+(const ELaurent& x, const ELaurent& y);
    friend ELaurent operator-(const ELaurent& x, const ELaurent& y);
    friend ELaurent operator*(const Rational& f, const ELaurent& x);
    friend ELaurent operator*(const ELaurent& x, const Rational& f);

    bool operator==(const ELaurent&) const = default;

    // Exact rendering, e.g. "-2 + 1*e + 0*e^-1".
    std::string str() const;

  private:
    Rational a_;
    Rational b_;
    Rational c_;
};

}  // namespace derange::exact

#endif
