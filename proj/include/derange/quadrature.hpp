#ifndef DERANGE_QUADRATURE_HPP
#define DERANGE_QUADRATURE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace derange::quad {

// Floating-point cross-check on the exact symbolic evaluations. Everything
// here is double precision by design; nothing in the exact decision paths
// depends on it.

struct QuadResult {
    double value = 0.0;
    double estimated_error = 0.0;
    std::uint64_t evaluations = 0;
};

class NonConvergence : public std::runtime_error {
  public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultEvalCap = 1000000;

// Adaptive-Simpson estimate of the integral over [a, b] of e^{-t} t^n with
// |error| <= tol. Requires a < b finite, n <= 20 and tol >= 1e-12. Throws
// NonConvergence if the evaluation budget runs out.
QuadResult integrate_exp_monomial(unsigned n, double a, double b, double tol,
                                  std::uint64_t eval_cap = kDefaultEvalCap);

// Bound on the integral over [T, inf) of e^{-t} t^n: 2 * T^n * e^{-T},
// valid for T >= 2n (the integrand is dominated by a halved exponential
// there).
double tail_bound(unsigned n, double truncation);

// Estimate of the integral over [0, inf) of e^{-t} t^n (= n!) as a finite
// integral on [0, truncation]; the certified remainder beyond the truncation
// point is folded into estimated_error. Requires n <= 15 and a truncation
// point whose tail bound is below tol/2.
QuadResult integrate_tail(unsigned n, double truncation, double tol,
                          std::uint64_t eval_cap = kDefaultEvalCap);

// Same, picking the truncation point: starts at max(50, 4n) and pushes it
// out until the tail bound drops below tol/2.
QuadResult integrate_tail(unsigned n, double tol);

}  // namespace derange::quad

#endif
