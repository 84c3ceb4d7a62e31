#include "derange/derangement.hpp"

#include <mutex>

namespace derange {

using exact::ELaurent;
using exact::Rational;

Integer DerangementTable::at(std::size_t n) {
    {
        std::shared_lock lock(mutex_);
        if (n < entries_.size()) {
            return entries_[n].first;
        }
    }
    std::unique_lock lock(mutex_);
    extend_to(n);
    return entries_[n].first;
}

DerangementTable::Method DerangementTable::method_of(std::size_t n) {
    std::unique_lock lock(mutex_);
    extend_to(n);
    return entries_[n].second;
}

std::size_t DerangementTable::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void DerangementTable::extend_to(std::size_t n) {
    while (entries_.size() <= n) {
        const std::size_t k = entries_.size();
        if (k == 0) {
            entries_.emplace_back(Integer(1), Method::Seed);
        } else if (k == 1) {
            entries_.emplace_back(Integer(0), Method::Seed);
        } else {
            Integer value = Integer(k - 1) * (entries_[k - 1].first + entries_[k - 2].first);
            // Insertion-time consistency check against the signed recurrence.
            Integer check = Integer(k) * entries_[k - 1].first + (k % 2 == 0 ? 1 : -1);
            if (value != check) {
                throw std::logic_error("DerangementTable: recurrences disagree at n = " + std::to_string(k));
            }
            entries_.emplace_back(std::move(value), Method::PairRecurrence);
        }
    }
}

DerangementTable& shared_table() {
    static DerangementTable table;
    return table;
}

Integer derangement(unsigned n) {
    return shared_table().at(n);
}

Integer derangement_series(unsigned n) {
    Rational sum = 0;
    Integer fact = 1;
    for (unsigned i = 0; i <= n; ++i) {
        if (i > 0) {
            fact *= i;
        }
        Rational term = exact::make_rational(1, fact);
        if (i % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    // fact holds n! after the loop.
    Rational value = sum * Rational(fact);
    if (!exact::is_integer(value)) {
        throw std::logic_error("derangement_series: non-integral result at n = " + std::to_string(n));
    }
    return numerator(value);
}

Integer derangement_pair_recurrence(unsigned n) {
    if (n == 0) {
        return 1;
    }
    Integer prev2 = 1;  // D(0)
    Integer prev1 = 0;  // D(1)
    for (unsigned k = 2; k <= n; ++k) {
        Integer next = Integer(k - 1) * (prev1 + prev2);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

Integer derangement_signed_recurrence(unsigned n) {
    Integer d = 1;  // D(0)
    for (unsigned k = 1; k <= n; ++k) {
        d = Integer(k) * d + (k % 2 == 0 ? 1 : -1);
    }
    return d;
}

Integer derangement_floor_formula(unsigned n) {
    return ELaurent::e_inv_times(Rational(exact::factorial(n) + 1)).floor();
}

Integer derangement_nearest_formula(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("derangement_nearest_formula: defined for n >= 1 only");
    }
    return ELaurent::e_inv_times(Rational(exact::factorial(n))).nearest();
}

Integer sum_rule_lhs(unsigned p) {
    DerangementTable& table = shared_table();
    Integer sum = 0;
    for (unsigned n = 1; n <= p; ++n) {
        sum += Integer(n) * table.at(n);
    }
    return sum;
}

Integer sum_rule_rhs(unsigned p) {
    return ELaurent::e_inv_times(Rational(exact::factorial(p + 1))).floor();
}

Integer a_recurrence(unsigned n) {
    if (n < 1) {
        throw std::invalid_argument("a_recurrence: defined for N >= 1");
    }
    Integer a = 0;  // A_1
    for (unsigned k = 2; k <= n; ++k) {
        a = Integer(k) * a + (k % 2 == 1 ? Integer(k - 1) : Integer(0));
    }
    return a;
}

Integer a_closed_form(unsigned n) {
    if (n < 1) {
        throw std::invalid_argument("a_closed_form: defined for N >= 1");
    }
    Rational sum = 0;
    Integer fact = 1;
    for (unsigned k = 1; k <= n; ++k) {
        fact *= k;
        if (k < 2) {
            continue;
        }
        Rational term = exact::make_rational(1, fact);
        if (k % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    Rational value = sum * Rational(fact);
    if (!exact::is_integer(value)) {
        throw std::logic_error("a_closed_form: non-integral result at N = " + std::to_string(n));
    }
    return numerator(value);
}

}  // namespace derange
