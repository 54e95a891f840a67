#ifndef FIBREP_GOLDEN_HPP
#define FIBREP_GOLDEN_HPP

// Frozen reference data the golden suite compares against.  The terms
// were fixed ahead of time and cross-checked by independent counting;
// they are deliberately literal so a regression cannot hide behind a
// shared code path.

#include <string>
#include <vector>

namespace fibrep {

struct GoldenFixture {
    std::string name;                // sequence identifier, e.g. "B0"
    std::string note;                // what the terms are
    long long target = 0;            // n for the B fixtures, unused for "f"
    long long first_index = 1;
    std::vector<long long> expected;
};

// B0 (18 terms), B1 / B2 / B3 (7 terms each) and the correction limit
// sequence f (16 terms, indexed from n = 0).
const std::vector<GoldenFixture>& golden_fixtures();

// The four length-3 representations of 1, in enumeration order.
const std::vector<std::string>& golden_one_length3();

// Tribonacci reference A000213 (seeds 1, 1, 1), indices 0..25.  The
// zero-target counts should match this sequence under some index
// shift; the golden suite finds the shift instead of assuming it.
const std::vector<long long>& a000213_prefix();

// All shifts s with count-of-zero(k) == a000213(k + s) across the full
// comparable range of the shipped prefix.
std::vector<long long> a000213_matching_shifts(int terms_to_check);

}  // namespace fibrep

#endif
