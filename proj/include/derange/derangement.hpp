#ifndef DERANGE_DERANGEMENT_HPP
#define DERANGE_DERANGEMENT_HPP

#include "derange/e_laurent.hpp"

#include <cstddef>
#include <deque>
#include <shared_mutex>

namespace derange {

using exact::Integer;

// Memoized table of derangement numbers. Entries are produced by the
// two-term recurrence D(n) = (n-1)(D(n-1) + D(n-2)) with seeds D(0) = 1,
// D(1) = 0, and every insertion is cross-checked against the one-term
// signed recurrence D(n) = n*D(n-1) + (-1)^n. Concurrent readers are
// allowed; extension takes an exclusive lock.
class DerangementTable {
  public:
    enum class Method { Seed, PairRecurrence };

    // D(n), extending the table on demand.
    Integer at(std::size_t n);

    Method method_of(std::size_t n);

    std::size_t size() const;

  private:
    void extend_to(std::size_t n);

    mutable std::shared_mutex mutex_;
    std::deque<std::pair<Integer, Method>> entries_;
};

// Process-wide table shared by the formula cross-checks and the CLI.
DerangementTable& shared_table();

// D(n) from the shared table.
Integer derangement(unsigned n);

// The formulas below are independent code paths on purpose, so they can
// cross-validate one another.

// n! * sum_{i=0..n} (-1)^i / i!, evaluated in exact rational arithmetic and
// certified integral.
Integer derangement_series(unsigned n);

// Two-term recurrence D(n) = (n-1)(D(n-1) + D(n-2)), unrolled iteratively.
Integer derangement_pair_recurrence(unsigned n);

// Signed recurrence D(n) = n*D(n-1) + (-1)^n with seed D(0) = 1.
Integer derangement_signed_recurrence(unsigned n);

// floor((n!+1)/e). Equals D(n) for n >= 1; at n = 0 it yields 0 while
// D(0) = 1, so callers comparing against D(n) must start at n = 1.
Integer derangement_floor_formula(unsigned n);

// Integer nearest to n!/e. Equals D(n) for n >= 1; n = 0 is out of contract
// and rejected (the nearest integer to 1/e is 0, not D(0) = 1).
Integer derangement_nearest_formula(unsigned n);

// S_p = sum_{n=0..p} n*D(n), via the shared table.
Integer sum_rule_lhs(unsigned p);

// floor((p+1)!/e), via a certified enclosure.
Integer sum_rule_rhs(unsigned p);

// Permutation-generation cost A_N: A_1 = 0 and
// A_N = N*A_{N-1} + (N-1 if N odd else 0). Requires N >= 1.
Integer a_recurrence(unsigned n);

// N! * sum_{k=2..N} (-1)^k / k! in exact rational arithmetic, certified
// integral. The sum collapses to D(N), so it equals a_recurrence(N) and
// floor(N!/e) exactly when N = 1 or N is odd; at every even N it exceeds
// them by one. See the tests for the empirical split.
Integer a_closed_form(unsigned n);

}  // namespace derange

#endif
