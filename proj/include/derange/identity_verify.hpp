#ifndef DERANGE_IDENTITY_VERIFY_HPP
#define DERANGE_IDENTITY_VERIFY_HPP

#include "derange/derangement.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace derange::verify {

using exact::ELaurent;
using exact::Integer;
using exact::Rational;

struct Failure {
    std::string input;
    std::string lhs;
    std::string rhs;
};

// One record per identity run. cases_checked always equals the range size;
// the run passes iff no failures were recorded. Checkers never throw on a
// mismatch, they record it.
struct VerificationReport {
    std::string identity_id;
    std::int64_t range_lo = 0;
    std::int64_t range_hi = 0;
    std::uint64_t cases_checked = 0;
    std::vector<Failure> failures;

    bool pass() const { return failures.empty(); }
};

std::string to_text(const VerificationReport& report);
std::string to_json_line(const VerificationReport& report);

// Exact value of the integral over [-1, inf) of e^{-t} t^n, as an ELaurent
// with only an e-coefficient. Integration by parts gives the recurrence
// I_0 = e, I_n = n*I_{n-1} + (-1)^n * e, evaluated on the coefficient; the
// quadrature module provides the independent numerical cross-check.
ELaurent symbolic_integral(unsigned n);

// e * floor((n!+1)/e) = integral over [-1, inf) of e^{-t} t^n, as an exact
// ELaurent equality. Fails at n = 0 (the integral is e but the floor is 0);
// holds for n >= 1.
VerificationReport verify_has1(unsigned n_lo, unsigned n_hi);

// integral over [-1, 0] of e^{-t} t^n = e*((1 + (-1)^n)/2 - {n!/e}), both
// sides expanded to ELaurent triples. n >= 1.
VerificationReport verify_has2(unsigned n_lo, unsigned n_hi);

// I(p+2) - (p+2)*I(p+1) = (-1)^p * e, the integration-by-parts step.
VerificationReport verify_iint(unsigned p_lo, unsigned p_hi);

// floor((p+2)!/e) = floor((p+1)!/e) + (p+1)*floor(((p+1)!+1)/e), the
// induction step behind the sum rule.
VerificationReport verify_toprove(unsigned p_lo, unsigned p_hi);

// Hermite identity sum_{k=0..m-1} floor(x + k/m) = floor(m*x) for one
// rational x and m >= 1, in exact rational arithmetic.
VerificationReport verify_hermite_rational(const Rational& x, unsigned m);

// Randomized Hermite instances: |num| <= 1e6, den <= 1e6, m <= 50.
// Deterministic for a fixed seed.
VerificationReport verify_hermite_random(unsigned cases, std::uint64_t seed);

// Hermite identity at m = p+2, x = (p+1)!/e, with every term an ELaurent
// floor, plus the collapse of each term: the k = 0 term is floor((p+1)!/e)
// and every 1 <= k <= p+1 term is floor(((p+1)!+1)/e).
VerificationReport verify_hermite_factorial(unsigned p_lo, unsigned p_hi);

// Strict bounds -1/(p+2) < (p+1)!/e - floor(((p+1)!+1)/e) < 1/(p+2),
// certified by sign evaluation of the two differences.
VerificationReport verify_fractional_bounds(unsigned p_lo, unsigned p_hi);

// S_p = D(p+1) - (1 if p odd else 0).
VerificationReport verify_parity_identity(unsigned p_lo, unsigned p_hi);

// nearest(m!/e) - floor(m!/e) = (1 if m even else 0), m >= 1.
VerificationReport verify_nearest_floor_split(unsigned m_lo, unsigned m_hi);

// sum_{n=0..p} C(p,n) D(n) = p! and, for every 0 <= l < p,
// sum_{n=0..p} C(p-l, n-l) D(p-n) = (p-l)!. One case per p.
VerificationReport verify_binomial_identities(unsigned p_max);

// S_p = floor((p+1)!/e) for 0 <= p <= p_max.
VerificationReport verify_theorem1(unsigned p_max);

// S_p = A_{p+1} for 0 <= p <= p_max.
VerificationReport verify_a_connection(unsigned p_max);

// Brute-force enumeration agreement: all four D(n) formulas against the
// fixed-point-free count for 0 <= n <= n_max, and S_p against the enumerated
// sum for 0 <= p <= min(n_max, 10).
VerificationReport verify_oracle(unsigned n_max);

}  // namespace derange::verify

#endif
