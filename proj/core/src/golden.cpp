#include "fibrep/golden.hpp"

#include "fibrep/recurrence.hpp"

namespace fibrep {

const std::vector<GoldenFixture>& golden_fixtures() {
    static const std::vector<GoldenFixture> fixtures = {
        {"B0",
         "counts of zero by length, 18 frozen terms",
         0,
         1,
         {1, 3, 5, 9, 17, 31, 57, 105, 193, 355, 653, 1201, 2209, 4063, 7473,
          13745, 25281, 46499}},
        {"B1", "counts of 1 by length, 7 frozen terms", 1, 1,
         {1, 2, 4, 9, 16, 30, 56}},
        {"B2", "counts of 2 by length, 7 frozen terms", 2, 1,
         {0, 1, 4, 8, 16, 31, 57}},
        {"B3", "counts of 3 by length, 7 frozen terms", 3, 1,
         {0, 0, 2, 7, 15, 30, 57}},
        {"f",
         "correction limits for n = 0..15, 16 frozen terms",
         0,
         0,
         {0, 1, 2, 4, 5, 7, 9, 11, 13, 15, 17, 20, 21, 24, 26, 29}},
    };
    return fixtures;
}

const std::vector<std::string>& golden_one_length3() {
    static const std::vector<std::string> reprs = {"001", "010", "1T0", "10T"};
    return reprs;
}

const std::vector<long long>& a000213_prefix() {
    static const std::vector<long long> terms = {
        1,      1,      1,      3,      5,      9,      17,     31,     57,
        105,    193,    355,    653,    1201,   2209,   4063,   7473,   13745,
        25281,  46499,  85525,  157305, 289329, 532159, 978793, 1800281};
    return terms;
}

std::vector<long long> a000213_matching_shifts(int terms_to_check) {
    const auto& reference = a000213_prefix();
    std::vector<BigInt> zero_terms;
    ZeroSequence seq;
    for (int k = 1; k <= terms_to_check; ++k) zero_terms.push_back(seq.next());
    // zero_terms[k-1] is compared to reference[k + s] wherever both
    // sides are defined; a shift qualifies only if at least two terms
    // overlap and none disagree.
    std::vector<long long> shifts;
    const long long ref_size = static_cast<long long>(reference.size());
    for (long long s = -terms_to_check; s < ref_size; ++s) {
        int compared = 0;
        bool ok = true;
        for (int k = 1; k <= terms_to_check; ++k) {
            const long long idx = k + s;
            if (idx < 0 || idx >= ref_size) continue;
            ++compared;
            if (zero_terms[static_cast<size_t>(k) - 1] !=
                static_cast<long>(reference[static_cast<size_t>(idx)])) {
                ok = false;
                break;
            }
        }
        if (ok && compared >= 2) shifts.push_back(s);
    }
    return shifts;
}

}  // namespace fibrep
