#ifndef DERANGE_ENCLOSURE_HPP
#define DERANGE_ENCLOSURE_HPP

#include "derange/exact.hpp"

namespace derange::exact {

// Thrown when an adaptive floor or sign computation reaches the precision cap
// without resolving. Never expected for well-formed inputs; signals a
// misconfigured cap.
class PrecisionExhausted : public std::runtime_error {
  public:
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Global ceiling for the number of series terms the adaptive schedule may
// request. Default 10000; the CLI can override it from the environment.
unsigned precision_cap();
void set_precision_cap(unsigned cap);

// Closed rational interval [lo, hi]. Endpoints are exact rationals, so every
// operation below is outward-conservative by construction: the true real
// result of an operation on members lies inside the result.
class Interval {
  public:
    Interval(Rational lo, Rational hi);

    static Interval point(Rational value);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }

    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool overlaps(const Interval& other) const;

    // f * [lo, hi], with the endpoints swapped for negative f.
    Interval scaled(const Rational& f) const;

    // [1/hi, 1/lo]; requires the interval not to straddle zero.
    Interval reciprocal() const;

    friend Interval operator+(const Interval& x, const Interval& y);

  private:
    Rational lo_;
    Rational hi_;
};

// [s_K, s_K + 1/(K!*K)] with s_K = sum_{k=0..K} 1/k!. The tail of the series
// is strictly less than 1/(K!*K) for K >= 1, so e lies strictly inside, and
// enclosures nest as K grows. Requires terms >= 1.
Interval e_enclosure(unsigned terms);

}  // namespace derange::exact

#endif
