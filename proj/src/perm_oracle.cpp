#include "derange/perm_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace derange::perm {

bool is_valid_permutation(const Permutation& sigma) {
    Permutation sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

int fixed_point_count(const Permutation& sigma) {
    int count = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] == static_cast<int>(i)) {
            ++count;
        }
    }
    return count;
}

HeapGenerator::HeapGenerator(int n, int cap) {
    if (n < 0) {
        throw std::invalid_argument("HeapGenerator: n must be non-negative");
    }
    if (n > cap) {
        throw CapExceeded("HeapGenerator: n = " + std::to_string(n) + " exceeds the enumeration cap of " +
                          std::to_string(cap));
    }
    items_.resize(static_cast<std::size_t>(n));
    std::iota(items_.begin(), items_.end(), 0);
    counters_.assign(items_.size(), 0);
}

bool HeapGenerator::advance() {
    const std::size_t n = items_.size();
    while (level_ < n) {
        if (counters_[level_] < static_cast<int>(level_)) {
            if (level_ % 2 == 0) {
                std::swap(items_[0], items_[level_]);
            } else {
                std::swap(items_[static_cast<std::size_t>(counters_[level_])], items_[level_]);
            }
            ++swaps_;
            ++counters_[level_];
            level_ = 1;
            return true;
        }
        counters_[level_] = 0;
        ++level_;
    }
    return false;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn, int cap) {
    HeapGenerator gen(n, cap);
    do {
        fn(gen.current());
    } while (gen.advance());
}

exact::Integer brute_derangement_count(int n, int cap) {
    exact::Integer count = 0;
    for_each_permutation(
        n,
        [&count](const Permutation& sigma) {
            if (fixed_point_count(sigma) == 0) {
                ++count;
            }
        },
        cap);
    return count;
}

exact::Integer brute_sum_rule(int p, int cap) {
    if (p < 0) {
        throw std::invalid_argument("brute_sum_rule: p must be non-negative");
    }
    if (p > cap) {
        throw CapExceeded("brute_sum_rule: p = " + std::to_string(p) + " exceeds the enumeration cap of " +
                          std::to_string(cap));
    }
    exact::Integer sum = 0;
    for (int n = 1; n <= p; ++n) {
        sum += exact::Integer(n) * brute_derangement_count(n, cap);
    }
    return sum;
}

}  // namespace derange::perm
