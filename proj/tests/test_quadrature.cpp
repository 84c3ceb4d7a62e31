#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derange/identity_verify.hpp"
#include "derange/quadrature.hpp"

#include <cmath>

using namespace derange::quad;

namespace {

double numeric(const derange::verify::ELaurent& x) {
    return x.enclosure(64).midpoint().convert_to<double>();
}

double exact_full_integral(unsigned n) {
    return numeric(derange::verify::symbolic_integral(n));
}

double exact_finite_integral(unsigned n) {
    using derange::verify::ELaurent;
    const derange::exact::Rational fact(derange::exact::factorial(n));
    return numeric(derange::verify::symbolic_integral(n) - ELaurent::from_rational(fact));
}

}  // namespace

TEST_CASE("finite integrals of e^{-t} t^n over [-1, 0]") {
    const QuadResult r0 = integrate_exp_monomial(0, -1.0, 0.0, 1e-10);
    CHECK(r0.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-9));
    CHECK(r0.estimated_error <= 1e-10);
    CHECK(r0.evaluations > 0);

    const QuadResult r1 = integrate_exp_monomial(1, -1.0, 0.0, 1e-10);
    CHECK(r1.value == doctest::Approx(-1.0).epsilon(1e-9));

    const QuadResult r5 = integrate_exp_monomial(5, -1.0, 0.0, 1e-10);
    CHECK(r5.value == doctest::Approx(-0.39559954780200964).epsilon(1e-9));
}

TEST_CASE("finite integrals match the exact symbolic values for n <= 12") {
    for (unsigned n = 0; n <= 12; ++n) {
        CAPTURE(n);
        const double reference = exact_finite_integral(n);
        const QuadResult r = integrate_exp_monomial(n, -1.0, 0.0, 1e-10);
        CHECK(std::abs(r.value - reference) <= 1e-8 * std::max(1.0, std::abs(reference)));
    }
}

TEST_CASE("tail integrals reproduce n!") {
    const QuadResult r0 = integrate_tail(0, 1e-9);
    CHECK(r0.value == doctest::Approx(1.0).epsilon(1e-8));

    const QuadResult r5 = integrate_tail(5, 1e-7);
    CHECK(r5.value == doctest::Approx(120.0).epsilon(1e-8));

    const QuadResult r10 = integrate_tail(10, 1e-2);
    CHECK(r10.value == doctest::Approx(3628800.0).epsilon(1e-8));
    CHECK(r10.estimated_error <= 1e-2);
}

TEST_CASE("finite plus tail reproduces the full integral from -1") {
    for (unsigned n = 0; n <= 12; ++n) {
        CAPTURE(n);
        const double reference = exact_full_integral(n);
        const QuadResult finite = integrate_exp_monomial(n, -1.0, 0.0, 1e-10);
        const QuadResult tail = integrate_tail(n, 1e-10 * std::max(1.0, reference));
        const double total = finite.value + tail.value;
        CHECK(std::abs(total - reference) <= 1e-8 * std::max(1.0, std::abs(reference)));
    }
}

TEST_CASE("tail bound is valid and monotone") {
    CHECK(tail_bound(0, 50.0) == doctest::Approx(2.0 * std::exp(-50.0)));
    CHECK(tail_bound(5, 60.0) < tail_bound(5, 50.0));
    CHECK_THROWS_AS(tail_bound(10, 19.0), std::invalid_argument);
}

TEST_CASE("tighter tolerances never loosen the error estimate") {
    double previous = 1.0;
    for (double tol : {1e-6, 1e-8, 1e-10}) {
        const QuadResult r = integrate_exp_monomial(8, -1.0, 0.0, tol);
        CHECK(r.estimated_error <= tol);
        CHECK(r.estimated_error <= previous + 1e-15);
        previous = r.estimated_error;
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(integrate_exp_monomial(21, -1.0, 0.0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(integrate_exp_monomial(2, 0.0, 0.0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(integrate_exp_monomial(2, -1.0, 0.0, 1e-13), std::invalid_argument);
    CHECK_THROWS_AS(integrate_tail(16, 1e-8), std::invalid_argument);
    // Truncation point whose certified remainder exceeds the tolerance.
    CHECK_THROWS_AS(integrate_tail(5, 10.0, 1e-12), std::invalid_argument);
}

TEST_CASE("an exhausted evaluation budget raises NonConvergence") {
    CHECK_THROWS_AS(integrate_exp_monomial(12, -1.0, 0.0, 1e-12, 50), NonConvergence);
}
