#include "derange/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace derange::quad {

namespace {

constexpr int kMaxDepth = 60;

double exp_monomial(unsigned n, double t) {
    double p = 1.0;
    for (unsigned i = 0; i < n; ++i) {
        p *= t;
    }
    return std::exp(-t) * p;
}

struct AdaptiveState {
    unsigned n;
    std::uint64_t eval_cap;
    std::uint64_t evaluations = 0;
    double error_sum = 0.0;

    double eval(double t) {
        if (++evaluations > eval_cap) {
            throw NonConvergence("integrate_exp_monomial: evaluation budget of " + std::to_string(eval_cap) +
                                 " exhausted");
        }
        return exp_monomial(n, t);
    }
};

double simpson(double h, double fa, double fm, double fb) {
    return (fa + 4.0 * fm + fb) * (h / 6.0);
}

// Classic adaptive Simpson with the Richardson error estimate
// (S_left + S_right - S_whole) / 15.
double adapt(AdaptiveState& st, double a, double b, double fa, double fm, double fb, double whole, double tol,
             int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.eval(lm);
    const double frm = st.eval(rm);
    const double left = simpson(m - a, fa, flm, fm);
    const double right = simpson(b - m, fm, frm, fb);
    const double err = (left + right - whole) / 15.0;
    if (depth >= kMaxDepth || std::abs(err) <= tol) {
        if (depth >= kMaxDepth && std::abs(err) > tol) {
            throw NonConvergence("integrate_exp_monomial: recursion depth limit hit");
        }
        st.error_sum += std::abs(err);
        return left + right + err;
    }
    return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

QuadResult integrate_exp_monomial(unsigned n, double a, double b, double tol, std::uint64_t eval_cap) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw std::invalid_argument("integrate_exp_monomial: need finite a < b");
    }
    if (n > 20) {
        throw std::invalid_argument("integrate_exp_monomial: n capped at 20 for double precision");
    }
    if (tol < 1e-12) {
        throw std::invalid_argument("integrate_exp_monomial: tol must be >= 1e-12");
    }
    AdaptiveState st{n, eval_cap};
    const double fa = st.eval(a);
    const double fb = st.eval(b);
    const double fm = st.eval(0.5 * (a + b));
    const double whole = simpson(b - a, fa, fm, fb);
    QuadResult result;
    result.value = adapt(st, a, b, fa, fm, fb, whole, tol, 0);
    result.estimated_error = st.error_sum;
    result.evaluations = st.evaluations;
    return result;
}

double tail_bound(unsigned n, double truncation) {
    if (truncation < 2.0 * n) {
        throw std::invalid_argument("tail_bound: bound requires truncation >= 2n");
    }
    double p = 1.0;
    for (unsigned i = 0; i < n; ++i) {
        p *= truncation;
    }
    return 2.0 * p * std::exp(-truncation);
}

QuadResult integrate_tail(unsigned n, double truncation, double tol, std::uint64_t eval_cap) {
    if (n > 15) {
        throw std::invalid_argument("integrate_tail: n capped at 15 for double precision");
    }
    if (tol < 1e-12) {
        throw std::invalid_argument("integrate_tail: tol must be >= 1e-12");
    }
    const double remainder = tail_bound(n, truncation);
    if (remainder > 0.5 * tol) {
        throw std::invalid_argument("integrate_tail: truncation point leaves a tail above tol/2");
    }
    QuadResult finite = integrate_exp_monomial(n, 0.0, truncation, tol - remainder, eval_cap);
    finite.estimated_error += remainder;
    return finite;
}

QuadResult integrate_tail(unsigned n, double tol) {
    double truncation = std::max(50.0, 4.0 * n);
    while (tail_bound(n, truncation) > 0.5 * tol) {
        truncation += 10.0;
    }
    return integrate_tail(n, truncation, tol);
}

}  // namespace derange::quad
