#ifndef DERANGE_PERM_ORACLE_HPP
#define DERANGE_PERM_ORACLE_HPP

#include "derange/exact.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace derange::perm {

// 0-indexed permutation of {0, ..., n-1}.
using Permutation = std::vector<int>;

// Guard against accidental factorial blowup; 12! is the practical ceiling.
inline constexpr int kDefaultCap = 12;
inline constexpr int kDefaultSumCap = 10;

class CapExceeded : public std::invalid_argument {
  public:
    explicit CapExceeded(const std::string& what) : std::invalid_argument(what) {}
};

bool is_valid_permutation(const Permutation& sigma);

// |{i : sigma[i] == i}|.
int fixed_point_count(const Permutation& sigma);

// Iterative Heap generator. Starts at the identity; every advance() applies
// exactly one transposition, and the stream visits each of the n!
// permutations exactly once (n! - 1 swaps in total).
class HeapGenerator {
  public:
    explicit HeapGenerator(int n, int cap = kDefaultCap);

    const Permutation& current() const { return items_; }

    // Steps to the next permutation; false once the stream is exhausted.
    bool advance();

    std::uint64_t swap_count() const { return swaps_; }

  private:
    Permutation items_;
    std::vector<int> counters_;
    std::size_t level_ = 1;
    std::uint64_t swaps_ = 0;
};

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn, int cap = kDefaultCap);

// Number of fixed-point-free permutations of n elements, by full enumeration.
exact::Integer brute_derangement_count(int n, int cap = kDefaultCap);

// sum_{n=0..p} n * brute_derangement_count(n).
exact::Integer brute_sum_rule(int p, int cap = kDefaultSumCap);

}  // namespace derange::perm

#endif
