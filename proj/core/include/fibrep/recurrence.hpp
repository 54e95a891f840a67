#ifndef FIBREP_RECURRENCE_HPP
#define FIBREP_RECURRENCE_HPP

// Length recurrences for representation counts.
//
// Writing B(n; k) for the number of length-k representations of n, the
// zero target satisfies the pure third order recurrence
//
//     B(0; k+1) = B(0; k) + B(0; k-1) + B(0; k-2)
//
// with seeds 1, 3, 5, and a general target picks up a correction term
//
//     B(n; k+1) = B(n; k) + B(n; k-1) + B(n; k-2) + f(n; k+1)
//
// where f(n; k) counts the length-k representations of n opening with
// one of the six prefixes in correction_prefixes().  f(n; k) becomes
// independent of k once k clears a threshold that grows with log |n|;
// past it the recurrence advances without touching the counters again.

#include "fibrep/enumerate.hpp"

namespace fibrep {

// How the correction term of a produced sequence entry was obtained.
enum class CorrectionSource {
    seed,    // k <= 3, value taken directly from the counting oracle
    oracle,  // f(n; k) counted per length, below the stabilization bound
    limit,   // cached stable value, at or past the bound
};

const char* correction_source_name(CorrectionSource source);

// B(0; k) by the pure recurrence.  O(k) big-integer additions.
BigInt count_zero(int k);

// B(n; k) by the corrected recurrence.  Falls back to the counting
// oracle only for the seeds and the pre-stabilization corrections.
BigInt count_general(long long n, int k);

// f(n; k): length-k representations of n opening with a correction
// prefix.  Patterns longer than k do not participate, so f(n; 1) = 0
// and f(n; 2) only sees the four two-digit prefixes.
BigInt correction_term(long long n, int k);

// Smallest length past which f(n; k) is provably constant.  Computed
// from the magnitude of n alone; stabilization may set in earlier.
int stabilization_bound(long long n);

// The stable value f(n).  Counted once at the bound, checked against
// the next two lengths, and cached.  A disagreement means the bound
// formula is wrong for this n and raises std::logic_error.
BigInt correction_limit(long long n);

// Smallest length (>= 3) from which the correction term already sits at
// its limit, found by scanning backwards from the bound.  Always at
// most stabilization_bound(n); usually smaller, since the bound is a
// proof artifact rather than a minimum.
int first_stable_index(long long n);

// Streaming form of count_zero: each call to next() yields B(0; k) for
// the next k, starting at k = 1.
class ZeroSequence {
  public:
    ZeroSequence() = default;

    int next_index() const { return next_k_; }
    BigInt next();

  private:
    int next_k_ = 1;
    BigInt window_[3] = {};  // most recent three terms once k > 3
};

// Streaming form of count_general, exposing per-term bookkeeping so
// callers can report where each correction came from.
class CountSequence {
  public:
    struct Term {
        int k = 0;
        BigInt value;
        BigInt correction;
        CorrectionSource source = CorrectionSource::seed;
    };

    explicit CountSequence(long long n);

    long long target() const { return target_; }
    int next_index() const { return next_k_; }
    Term next();

  private:
    long long target_;
    int bound_;
    int next_k_ = 1;
    BigInt window_[3] = {};
};

}  // namespace fibrep

#endif
