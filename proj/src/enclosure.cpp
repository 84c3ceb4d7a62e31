#include "derange/enclosure.hpp"

#include <atomic>
#include <utility>

namespace derange::exact {

namespace {

constexpr unsigned kDefaultPrecisionCap = 10000;

std::atomic<unsigned>& cap_storage() {
    static std::atomic<unsigned> cap{kDefaultPrecisionCap};
    return cap;
}

}  // namespace

unsigned precision_cap() {
    return cap_storage().load(std::memory_order_relaxed);
}

void set_precision_cap(unsigned cap) {
    if (cap < 1) {
        throw std::invalid_argument("set_precision_cap: cap must be >= 1");
    }
    cap_storage().store(cap, std::memory_order_relaxed);
}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) {
        throw std::invalid_argument("Interval: lo > hi");
    }
}

Interval Interval::point(Rational value) {
    Rational copy = value;
    return Interval(std::move(copy), std::move(value));
}

bool Interval::overlaps(const Interval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
}

Interval Interval::scaled(const Rational& f) const {
    if (f >= 0) {
        return Interval(f * lo_, f * hi_);
    }
    return Interval(f * hi_, f * lo_);
}

Interval Interval::reciprocal() const {
    if (lo_ <= 0 && hi_ >= 0) {
        throw std::domain_error("Interval::reciprocal: interval straddles zero");
    }
    return Interval(1 / hi_, 1 / lo_);
}

Interval operator+(const Interval& x, const Interval& y) {
    return Interval(x.lo_ + y.lo_, x.hi_ + y.hi_);
}

Interval e_enclosure(unsigned terms) {
    if (terms < 1) {
        throw std::invalid_argument("e_enclosure: need at least one term");
    }
    // sum_{k=0..K} K!/k! satisfies C_K = K*C_{K-1} + 1, C_0 = 1, which builds
    // the partial sum s_K = C_K/K! without any intermediate rationals.
    Integer sum_num = 1;
    Integer fact = 1;
    for (unsigned k = 1; k <= terms; ++k) {
        sum_num = sum_num * k + 1;
        fact *= k;
    }
    Rational lo = make_rational(sum_num, fact);
    Rational hi = make_rational(sum_num * terms + 1, fact * terms);
    return Interval(std::move(lo), std::move(hi));
}

}  // namespace derange::exact
