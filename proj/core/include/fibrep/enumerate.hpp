#ifndef FIBREP_ENUMERATE_HPP
#define FIBREP_ENUMERATE_HPP

// Counting and listing the length-k signed representations of a target.
//
// Two independent routes are kept side by side on purpose.  count_brute
// walks all 3^k digit strings and is the ground truth for small k;
// count_pruned is a memoized digit DP that reaches far larger lengths.
// Tests hold the two together, so neither may be rewritten in terms of
// the other.

#include "fibrep/representation.hpp"

#include <map>
#include <vector>

namespace fibrep {

enum class CountMode { full_enum, pruned };

// A counting request as issued by the command line tool.  An empty
// prefix_filter means "count everything"; a non-empty one restricts the
// count to representations starting with one of the listed patterns,
// which must not overlap pairwise.
struct CountQuery {
    long long target = 0;
    int length = 0;
    std::vector<PrefixPattern> prefix_filter;
    CountMode mode = CountMode::pruned;
};

// All length-k representations of n in ascending order of the digit
// string read as a balanced-ternary-style number (top digit weighs
// most, T < 0 < 1).  Throws std::invalid_argument for k < 1 or k > 90.
std::vector<Representation> enumerate_representations(long long n, int k);

// Exhaustive count over all 3^k digit strings, incremental odometer
// sums.  Exponential in k; the reference the fast path is tested
// against.  Throws std::invalid_argument for k < 1 or k > 39.
BigInt count_brute(long long n, int k);

// Digit DP over (digits left, remaining value) with capacity pruning:
// a remainder beyond +-(F_{i+2} - 1) cannot be finished by i digits.
// Throws std::invalid_argument for k < 1 or k > 90.
BigInt count_pruned(long long n, int k);

// Sum of pruned counts over representations starting with each given
// pattern.  Patterns must be non-empty, at most k long, and pairwise
// non-overlapping (no pattern extends another), otherwise the classes
// they describe would intersect; violations throw std::invalid_argument.
BigInt count_with_prefixes(long long n, int k,
                           const std::vector<PrefixPattern>& prefixes);

// value -> number of length-k strings denoting it, one odometer sweep.
// Same k limits as count_brute.
std::map<long long, unsigned long long> value_histogram(int k);

// Dispatch on mode and filter.  full_enum routes through the odometer
// or the enumeration list, pruned through the DP.
BigInt run_count(const CountQuery& query);

}  // namespace fibrep

#endif
