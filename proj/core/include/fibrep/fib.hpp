#ifndef FIBREP_FIB_HPP
#define FIBREP_FIB_HPP

// Fibonacci numbers with the 1-based convention used throughout this
// library: fib(1) = fib(2) = 1, fib(i) = fib(i-1) + fib(i-2).
//
// Counts of signed representations grow like 2.2^k and the numbers
// themselves overflow int64 past index 92, so the public interface is
// arbitrary precision.  A plain int64 table is exposed for the counting
// kernels, which stay well inside the representable range.

#include <gmpxx.h>

#include <vector>

namespace fibrep {

using BigInt = mpz_class;

// fib(index) for index >= 1.  Values are memoized across calls; safe to
// call from multiple threads.  Throws std::invalid_argument for index < 1.
BigInt fib(int index);

// F_1 + F_2 + ... + F_count, which telescopes to fib(count + 2) - 1.
// count == 0 gives 0.  The largest value a digit string of given length
// can reach, so the capacity bound behind every pruning step.
BigInt fib_prefix_sum(int count);

namespace detail {

// Largest index whose Fibonacci number fits in a signed 64-bit word.
inline constexpr int max_fib_index_ll = 92;

// table[i] = F_i for 1 <= i <= max_index, table[0] unused.  max_index
// must not exceed max_fib_index_ll.
std::vector<long long> fib_table_ll(int max_index);

}  // namespace detail

}  // namespace fibrep

#endif
