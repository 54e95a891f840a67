#ifndef FIBREP_ZECKENDORF_HPP
#define FIBREP_ZECKENDORF_HPP

// Greedy decomposition of a positive integer into non-consecutive
// Fibonacci numbers with indices >= 2, unique by Zeckendorf's theorem.
// Used as a known-good value decomposition when cross-checking the
// signed counting routines.

#include "fibrep/representation.hpp"

namespace fibrep {

// Representation of n with digits in {0, 1}, no two adjacent ones, and
// digit(1) always 0 (index 1 is skipped so the expansion is canonical:
// the value 1 is F_2, rendered "10").  Throws std::invalid_argument for
// n <= 0.
Representation zeckendorf(const BigInt& n);

}  // namespace fibrep

#endif
