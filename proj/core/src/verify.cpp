#include "fibrep/verify.hpp"

#include "fibrep/bijections.hpp"
#include "fibrep/enumerate.hpp"
#include "fibrep/golden.hpp"
#include "fibrep/recurrence.hpp"
#include "fibrep/sequence_record.hpp"
#include "fibrep/zeckendorf.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibrep {

void VerifyGrid::clamp(int n_max, int k_max) {
    if (n_max > 0) {
        oracle_n_max = std::min(oracle_n_max, n_max);
        recurrence_n_max = std::min(recurrence_n_max, n_max);
        bijection_n_max = std::min(bijection_n_max, n_max);
        stabilization_n_max = std::min(stabilization_n_max, n_max);
    }
    if (k_max > 0) {
        oracle_k_max = std::min(oracle_k_max, k_max);
        recurrence_k_max = std::min(recurrence_k_max, k_max);
        bijection_k_max = std::min(bijection_k_max, k_max);
        prefix_k_max = std::min(prefix_k_max, k_max);
    }
}

namespace {

// Collects the first counterexample; later failures are counted but
// not described, keeping the report readable.
class Property {
  public:
    explicit Property(std::string name) { result_.name = std::move(name); }

    void fail(const std::string& detail) {
        if (result_.passed) {
            result_.passed = false;
            result_.detail = detail;
        }
        ++failures_;
    }

    void require(bool ok, const std::string& detail) {
        if (!ok) fail(detail);
    }

    // Scope note shown for passing properties.
    void note(const std::string& text) { note_ = text; }

    PropertyResult take() {
        if (result_.passed)
            result_.detail = note_;
        else if (failures_ > 1)
            result_.detail += " (+" + std::to_string(failures_ - 1) +
                              " further failures)";
        return std::move(result_);
    }

  private:
    PropertyResult result_;
    std::string note_;
    int failures_ = 0;
};

template <typename Fn>
PropertyResult run_property(const std::string& name, Fn&& body) {
    Property p(name);
    try {
        body(p);
    } catch (const std::exception& e) {
        p.fail(std::string("unexpected exception: ") + e.what());
    }
    return p.take();
}

std::string cell(long long n, int k) {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

// Every length-k digit vector, least significant first, odometer order.
template <typename Fn>
void for_each_string(int k, Fn&& body) {
    std::vector<Digit> digits(static_cast<size_t>(k), Digit::minus);
    for (;;) {
        body(digits);
        size_t i = 0;
        while (i < digits.size() && digits[i] == Digit::plus) {
            digits[i] = Digit::minus;
            ++i;
        }
        if (i == digits.size()) return;
        digits[i] = digits[i] == Digit::minus ? Digit::zero : Digit::plus;
    }
}

std::vector<PrefixPattern> all_two_digit_patterns() {
    std::vector<PrefixPattern> patterns;
    for (char a : {'T', '0', '1'})
        for (char b : {'T', '0', '1'})
            patterns.push_back(PrefixPattern::parse(std::string{a, b}));
    return patterns;
}

BigInt pow3(int k) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(k));
    return p;
}

unsigned long long histogram_at(
    const std::map<long long, unsigned long long>& histogram, long long n) {
    auto it = histogram.find(n);
    return it == histogram.end() ? 0 : it->second;
}

}  // namespace

std::vector<PropertyResult> run_core_suite(const VerifyGrid&) {
    std::vector<PropertyResult> results;

    results.push_back(run_property("prefix_sum_identity", [](Property& p) {
        BigInt running = 0;
        for (int m = 0; m <= 200; ++m) {
            if (m > 0) running += fib(m);
            p.require(fib_prefix_sum(m) == running,
                      "prefix sum disagrees with direct summation at m = " +
                          std::to_string(m));
            p.require(fib_prefix_sum(m) == fib(m + 2) - 1,
                      "prefix sum closed form fails at m = " + std::to_string(m));
        }
        p.note("m = 0..200, summation vs closed form");
    }));

    results.push_back(run_property("negation_involution", [](Property& p) {
        for (int k = 1; k <= 8; ++k)
            for_each_string(k, [&](const std::vector<Digit>& digits) {
                const auto r = Representation::from_lsb_digits(digits);
                const auto neg = negated(r);
                p.require(negated(neg) == r,
                          "double negation changed " + r.str());
                p.require(evaluate(neg) == -evaluate(r),
                          "negation does not flip the value of " + r.str());
            });
        p.note("all digit strings of length 1..8");
    }));

    results.push_back(run_property("value_support_bound", [](Property& p) {
        for (int k = 1; k <= 8; ++k) {
            const BigInt cap = fib_prefix_sum(k);
            for_each_string(k, [&](const std::vector<Digit>& digits) {
                const auto r = Representation::from_lsb_digits(digits);
                const BigInt value = evaluate(r);
                p.require(value <= cap && value >= -cap,
                          r.str() + " evaluates outside the support bound");
                const bool uniform =
                    std::all_of(digits.begin(), digits.end(),
                                [&](Digit d) { return d == digits.front(); }) &&
                    digits.front() != Digit::zero;
                p.require((value == cap || value == -cap) == uniform,
                          r.str() + " hits the bound iff all digits agree");
            });
        }
        p.note("all digit strings of length 1..8, equality case included");
    }));

    results.push_back(run_property("zeckendorf_roundtrip", [](Property& p) {
        for (long n = 1; n <= 10000; ++n) {
            const auto r = zeckendorf(BigInt(n));
            p.require(evaluate(r) == BigInt(n),
                      "zeckendorf(" + std::to_string(n) + ") evaluates wrong");
            const auto& digits = r.lsb_digits();
            p.require(digits.front() == Digit::zero,
                      "zeckendorf(" + std::to_string(n) + ") uses index 1");
            bool digits_ok = true, adjacency_ok = true;
            for (size_t i = 0; i < digits.size(); ++i) {
                if (digits[i] == Digit::minus) digits_ok = false;
                if (i + 1 < digits.size() && digits[i] == Digit::plus &&
                    digits[i + 1] == Digit::plus)
                    adjacency_ok = false;
            }
            p.require(digits_ok, "zeckendorf(" + std::to_string(n) +
                                     ") contains a negative digit");
            p.require(adjacency_ok, "zeckendorf(" + std::to_string(n) +
                                        ") uses adjacent indices");
        }
        p.note("n = 1..10000");
    }));

    return results;
}

std::vector<PropertyResult> run_oracle_suite(const VerifyGrid& grid) {
    std::vector<PropertyResult> results;
    const int n_max = grid.oracle_n_max;
    const int k_max = grid.oracle_k_max;

    results.push_back(run_property("oracle_agreement", [&](Property& p) {
        for (int k = 1; k <= k_max; ++k) {
            const auto histogram = value_histogram(k);
            for (long long n = -n_max; n <= n_max; ++n)
                p.require(count_pruned(n, k) ==
                              static_cast<unsigned long>(histogram_at(histogram, n)),
                          "pruned count deviates from exhaustive sweep at " +
                              cell(n, k));
        }
        // The sweep shares machinery with count_brute; tie them directly
        // on a modest block so the slow route is exercised verbatim.
        for (int k = 1; k <= std::min(8, k_max); ++k)
            for (long long n = -n_max; n <= n_max; ++n)
                p.require(count_brute(n, k) == count_pruned(n, k),
                          "count_brute deviates at " + cell(n, k));
        p.note("|n| <= " + std::to_string(n_max) + ", k <= " +
               std::to_string(k_max));
    }));

    results.push_back(run_property("mass_conservation", [&](Property& p) {
        for (int k = 1; k <= k_max; ++k) {
            BigInt total = 0;
            for (const auto& [value, count] : value_histogram(k))
                total += BigInt(static_cast<unsigned long>(count));
            p.require(total == pow3(k),
                      "histogram mass misses 3^k at k = " + std::to_string(k));
        }
        p.note("k <= " + std::to_string(k_max));
    }));

    results.push_back(run_property("negation_symmetry", [&](Property& p) {
        for (int k = 1; k <= k_max; ++k) {
            const auto histogram = value_histogram(k);
            for (const auto& [value, count] : histogram)
                p.require(histogram_at(histogram, -value) == count,
                          "asymmetric count at " + cell(value, k));
        }
        p.note("full value range, k <= " + std::to_string(k_max));
    }));

    results.push_back(run_property("support_bound", [&](Property& p) {
        for (int k = 1; k <= k_max; ++k) {
            const long long cap =
                detail::fib_table_ll(k + 2)[static_cast<size_t>(k) + 2] - 1;
            p.require(count_brute(cap + 1, k) == 0 &&
                          count_brute(-cap - 1, k) == 0,
                      "count survives beyond the support cap at k = " +
                          std::to_string(k));
            const auto histogram = value_histogram(k);
            p.require(histogram_at(histogram, cap) == 1 &&
                          histogram_at(histogram, -cap) == 1,
                      "extremes not uniquely represented at k = " +
                          std::to_string(k));
        }
        p.note("caps +-(F_{k+2}-1), k <= " + std::to_string(k_max));
    }));

    results.push_back(run_property("prefix_partition", [&](Property& p) {
        const auto pairs = all_two_digit_patterns();
        const std::vector<PrefixPattern> singles = {
            PrefixPattern::parse("T"), PrefixPattern::parse("0"),
            PrefixPattern::parse("1")};
        for (int k = 3; k <= std::min(10, k_max); ++k)
            for (long long n = -20; n <= 20; ++n) {
                const BigInt whole = count_pruned(n, k);
                p.require(count_with_prefixes(n, k, pairs) == whole,
                          "two-digit prefixes fail to partition at " + cell(n, k));
                p.require(count_with_prefixes(n, k, singles) == whole,
                          "leading-digit prefixes fail to partition at " +
                              cell(n, k));
            }
        p.note("|n| <= 20, k = 3..10, 9 pair and 3 single patterns");
    }));

    return results;
}

std::vector<PropertyResult> run_recurrence_suite(const VerifyGrid& grid) {
    std::vector<PropertyResult> results;
    const int n_max = grid.recurrence_n_max;
    const int k_max = grid.recurrence_k_max;

    results.push_back(run_property("zero_recurrence_vs_oracle", [&](Property& p) {
        ZeroSequence seq;
        for (int k = 1; k <= 18; ++k) {
            const BigInt term = seq.next();
            const BigInt oracle =
                k <= 12 ? count_brute(0, k) : count_pruned(0, k);
            p.require(term == oracle,
                      "zero recurrence deviates at k = " + std::to_string(k));
        }
        p.note("k = 1..18, brute oracle through k = 12");
    }));

    results.push_back(
        run_property("general_recurrence_vs_oracle", [&](Property& p) {
            for (long long n = -n_max; n <= n_max; ++n) {
                CountSequence seq(n);
                for (int k = 1; k <= k_max; ++k) {
                    const auto term = seq.next();
                    p.require(term.value == count_pruned(n, k),
                              "corrected recurrence deviates at " + cell(n, k));
                }
            }
            p.note("|n| <= " + std::to_string(n_max) + ", k <= " +
                   std::to_string(k_max));
        }));

    results.push_back(run_property("defect_identity", [&](Property& p) {
        for (long long n = -n_max; n <= n_max; ++n)
            for (int k = 3; k + 1 <= k_max; ++k) {
                const BigInt defect =
                    count_pruned(n, k + 1) - count_pruned(n, k) -
                    count_pruned(n, k - 1) - count_pruned(n, k - 2);
                p.require(defect == correction_term(n, k + 1),
                          "defect is not the correction term at " +
                              cell(n, k + 1));
                p.require(defect >= 0,
                          "negative defect at " + cell(n, k + 1));
            }
        p.note("|n| <= " + std::to_string(n_max) + ", lengths 4.." +
               std::to_string(k_max) + ", oracle terms only");
    }));

    results.push_back(run_property("zero_specialization", [&](Property& p) {
        for (int k = 3; k <= 15; ++k)
            p.require(correction_term(0, k) == 0,
                      "zero target has a correction at k = " + std::to_string(k));
        ZeroSequence zero;
        CountSequence general(0);
        for (int k = 1; k <= 15; ++k)
            p.require(zero.next() == general.next().value,
                      "zero specialization fails at k = " + std::to_string(k));
        p.note("k = 1..15");
    }));

    results.push_back(run_property("stabilization_window", [&](Property& p) {
        for (long long n = -grid.stabilization_n_max;
             n <= grid.stabilization_n_max; ++n) {
            const int bound = stabilization_bound(n);
            const BigInt limit = correction_limit(n);
            for (int k = bound; k <= bound + 6; ++k)
                p.require(correction_term(n, k) == limit,
                          "correction moves inside the stable window at " +
                              cell(n, k));
        }
        p.note("|n| <= " + std::to_string(grid.stabilization_n_max) +
               ", window bound..bound+6");
    }));

    results.push_back(run_property("monotonicity", [&](Property& p) {
        for (long long n = -n_max; n <= n_max; ++n) {
            CountSequence seq(n);
            BigInt previous;
            for (int k = 1; k <= k_max; ++k) {
                const BigInt value = seq.next().value;
                if (k >= 4)
                    p.require(value >= previous,
                              "count shrinks with length at " + cell(n, k));
                previous = value;
            }
        }
        p.note("|n| <= " + std::to_string(n_max) + ", k >= 3");
    }));

    return results;
}

std::vector<PropertyResult> run_bijection_suite(const VerifyGrid& grid) {
    std::vector<PropertyResult> results;
    const int n_max = grid.bijection_n_max;
    const int k_max = grid.bijection_k_max;

    const auto is_strippable = [](PrefixClass c) {
        return c == PrefixClass::leading_zero ||
               c == PrefixClass::plus_minus_zero ||
               c == PrefixClass::minus_plus_zero ||
               c == PrefixClass::plus_minus_minus ||
               c == PrefixClass::minus_plus_plus;
    };

    results.push_back(run_property("classification_totality", [&](Property& p) {
        for (long long n = -n_max; n <= n_max; ++n)
            for (int len = 3; len <= k_max; ++len) {
                const auto reps = enumerate_representations(n, len);
                BigInt forbidden = 0;
                for (const auto& r : reps) {
                    const PrefixClass coarse = classify_prefix(r);
                    const PrefixClass fine = classify_prefix_fine(r);
                    if (coarse == PrefixClass::forbidden_pair) {
                        p.require(fine == PrefixClass::forbidden_pair ||
                                      fine == PrefixClass::stable_pair,
                                  "fine class breaks refinement for " + r.str());
                    } else {
                        p.require(fine == coarse,
                                  "fine class relabels " + r.str());
                    }
                    if (coarse == PrefixClass::forbidden_pair ||
                        coarse == PrefixClass::forbidden_triple)
                        forbidden += 1;
                }
                p.require(forbidden == correction_term(n, len),
                          "forbidden classes miscount the correction at " +
                              cell(n, len));
            }
        p.note("|n| <= " + std::to_string(n_max) + ", lengths 3.." +
               std::to_string(k_max));
    }));

    results.push_back(run_property("strip_roundtrip", [&](Property& p) {
        for (long long n = -n_max; n <= n_max; ++n)
            for (int len = 4; len <= k_max; ++len)
                for (const auto& r : enumerate_representations(n, len)) {
                    const PrefixClass c = classify_prefix(r);
                    if (!is_strippable(c)) {
                        try {
                            strip_prefix(r);
                            p.fail("strip accepted unmapped class for " +
                                   r.str());
                        } catch (const std::invalid_argument&) {
                        }
                        continue;
                    }
                    const auto stripped = strip_prefix(r);
                    const int expected_len =
                        c == PrefixClass::leading_zero      ? len - 1
                        : c == PrefixClass::minus_plus_plus ? len - 3
                                                            : len - 2;
                    p.require(stripped.length() == expected_len,
                              "strip length wrong for " + r.str());
                    p.require(evaluate(stripped) == evaluate(r),
                              "strip changes the value of " + r.str());
                    p.require(restore_prefix(stripped, c) == r,
                              "restore does not invert strip for " + r.str());
                }
        p.note("every representation, |n| <= " + std::to_string(n_max) +
               ", lengths 4.." + std::to_string(k_max));
    }));

    results.push_back(run_property("cardinality_ledger", [&](Property& p) {
        for (long long n = -n_max; n <= n_max; ++n)
            for (int len = 4; len <= k_max; ++len) {
                BigInt z = 0, one_shorter = 0, two_shorter = 0;
                for (const auto& r : enumerate_representations(n, len))
                    switch (classify_prefix(r)) {
                        case PrefixClass::leading_zero: z += 1; break;
                        case PrefixClass::plus_minus_zero:
                        case PrefixClass::minus_plus_zero:
                        case PrefixClass::plus_minus_minus:
                            one_shorter += 1;
                            break;
                        case PrefixClass::minus_plus_plus:
                            two_shorter += 1;
                            break;
                        default: break;
                    }
                p.require(z == count_pruned(n, len - 1),
                          "leading-zero class miscounts at " + cell(n, len));
                p.require(one_shorter == count_pruned(n, len - 2),
                          "triple classes miscount at " + cell(n, len));
                p.require(two_shorter == count_pruned(n, len - 3),
                          "drop-two class miscounts at " + cell(n, len));
            }
        p.note("the three recurrence terms, |n| <= " + std::to_string(n_max) +
               ", lengths 4.." + std::to_string(k_max));
    }));

    results.push_back(run_property("restore_onto_classes", [&](Property& p) {
        const std::vector<PrefixClass> classes = {
            PrefixClass::leading_zero, PrefixClass::plus_minus_zero,
            PrefixClass::minus_plus_zero, PrefixClass::plus_minus_minus,
            PrefixClass::minus_plus_plus};
        for (long long n = -n_max; n <= n_max; ++n)
            for (int len = 3; len <= k_max - 1; ++len)
                for (const auto& r : enumerate_representations(n, len))
                    for (PrefixClass target : classes) {
                        // Restoration is defined when the top digit
                        // matches the class and the result is length >= 4.
                        const Digit top = r.top();
                        const bool eligible =
                            target == PrefixClass::leading_zero ||
                            target == PrefixClass::minus_plus_plus ||
                            (target == PrefixClass::plus_minus_zero &&
                             top == Digit::plus) ||
                            (target == PrefixClass::minus_plus_zero &&
                             top == Digit::minus) ||
                            (target == PrefixClass::plus_minus_minus &&
                             top == Digit::zero);
                        if (!eligible) continue;
                        const auto restored = restore_prefix(r, target);
                        p.require(classify_prefix(restored) == target,
                                  "restored class mislabels " + r.str());
                        p.require(evaluate(restored) == evaluate(r),
                                  "restore changes the value of " + r.str());
                        p.require(strip_prefix(restored) == r,
                                  "strip does not invert restore for " +
                                      r.str());
                    }
        p.note("all five classes, |n| <= " + std::to_string(n_max) +
               ", source lengths 3.." + std::to_string(k_max - 1));
    }));

    results.push_back(run_property("stable_map_bijection", [&](Property& p) {
        for (long long n = -n_max; n <= n_max; ++n) {
            const int bound = stabilization_bound(n);
            for (int len = bound + 1; len <= bound + 2; ++len) {
                std::set<std::string> images;
                std::set<std::string> stable_targets;
                for (const auto& r : enumerate_representations(n, len))
                    if (classify_prefix_fine(r) == PrefixClass::stable_pair) {
                        const auto shorter = drop_stable_digit(r);
                        p.require(evaluate(shorter) == evaluate(r),
                                  "stable drop changes the value of " + r.str());
                        p.require(insert_stable_digit(shorter) == r,
                                  "stable insert does not invert drop for " +
                                      r.str());
                        images.insert(shorter.str());
                    }
                for (const auto& q : enumerate_representations(n, len - 1)) {
                    const Digit top = q.top();
                    if (q.digit(q.length() - 1) == Digit::zero &&
                        (top == Digit::plus || top == Digit::minus))
                        stable_targets.insert(q.str());
                }
                p.require(images == stable_targets,
                          "stable map is not onto the 10/T0 openings at " +
                              cell(n, len));
            }
        }
        p.note("|n| <= " + std::to_string(n_max) +
               ", lengths bound+1..bound+2 per target");
    }));

    return results;
}

std::vector<PropertyResult> run_prefix_suite(const VerifyGrid& grid) {
    std::vector<PropertyResult> results;

    results.push_back(run_property("zero_forbidden_prefixes", [&](Property& p) {
        for (int k = grid.prefix_k_min; k <= grid.prefix_k_max; ++k)
            p.require(check_zero_forbidden_prefixes(k),
                      "a zero representation opens with a forbidden prefix "
                      "at k = " + std::to_string(k));
        p.note("exhaustive enumeration, k = " +
               std::to_string(grid.prefix_k_min) + ".." +
               std::to_string(grid.prefix_k_max));
    }));

    results.push_back(run_property("zero_correction_vanishes", [&](Property& p) {
        for (int k = grid.prefix_k_min; k <= grid.prefix_k_max; ++k)
            p.require(correction_term(0, k) == 0,
                      "nonzero correction for target 0 at k = " +
                          std::to_string(k));
        p.note("k = " + std::to_string(grid.prefix_k_min) + ".." +
               std::to_string(grid.prefix_k_max));
    }));

    return results;
}

std::vector<PropertyResult> run_golden_suite() {
    std::vector<PropertyResult> results;

    for (const auto& fixture : golden_fixtures()) {
        if (fixture.name == "f") continue;
        results.push_back(run_property(
            "golden_" + fixture.name, [&fixture](Property& p) {
                CountSequence seq(fixture.target);
                for (size_t i = 0; i < fixture.expected.size(); ++i) {
                    const int k = static_cast<int>(fixture.first_index + i);
                    const long expected =
                        static_cast<long>(fixture.expected[i]);
                    p.require(seq.next().value == expected,
                              "recurrence misses the frozen term at " +
                                  cell(fixture.target, k));
                    p.require(count_pruned(fixture.target, k) == expected,
                              "pruned count misses the frozen term at " +
                                  cell(fixture.target, k));
                    if (k <= 12)
                        p.require(count_brute(fixture.target, k) == expected,
                                  "brute count misses the frozen term at " +
                                      cell(fixture.target, k));
                }
                if (fixture.target == 0) {
                    ZeroSequence zero;
                    for (size_t i = 0; i < fixture.expected.size(); ++i)
                        p.require(zero.next() ==
                                      static_cast<long>(fixture.expected[i]),
                                  "pure zero recurrence misses term " +
                                      std::to_string(i + 1));
                }
                p.note(fixture.note);
            }));
    }

    results.push_back(run_property("golden_f", [](Property& p) {
        const auto& fixtures = golden_fixtures();
        const auto it =
            std::find_if(fixtures.begin(), fixtures.end(),
                         [](const auto& f) { return f.name == "f"; });
        for (size_t i = 0; i < it->expected.size(); ++i) {
            const long long n = it->first_index + static_cast<long long>(i);
            p.require(correction_limit(n) ==
                          static_cast<long>(it->expected[i]),
                      "correction limit misses the frozen term at n = " +
                          std::to_string(n));
        }
        p.note(it->note);
    }));

    results.push_back(run_property("golden_enumeration", [](Property& p) {
        const auto reps = enumerate_representations(1, 3);
        const auto& expected = golden_one_length3();
        p.require(reps.size() == expected.size(),
                  "wrong number of length-3 representations of 1");
        for (size_t i = 0; i < reps.size() && i < expected.size(); ++i)
            p.require(reps[i].str() == expected[i],
                      "representation order differs at position " +
                          std::to_string(i) + ": " + reps[i].str());
        p.note("the four representations of 1 at length 3, fixed order");
    }));

    results.push_back(run_property("a000213_shift", [](Property& p) {
        const auto shifts = a000213_matching_shifts(18);
        p.require(shifts.size() == 1,
                  "expected exactly one matching shift, found " +
                      std::to_string(shifts.size()));
        if (shifts.size() == 1)
            p.note("zero counts match the tribonacci reference at shift " +
                   std::to_string(shifts.front()) +
                   " (term k aligns with reference index k+" +
                   std::to_string(shifts.front()) + ")");
    }));

    return results;
}

std::vector<PropertyResult> run_io_suite() {
    std::vector<PropertyResult> results;

    const auto make_zero_record = [](int k_max) {
        SequenceRecord record;
        record.name = "B0";
        record.params = {{"from", 1}, {"to", k_max}};
        ZeroSequence seq;
        for (int k = 1; k <= k_max; ++k) record.terms.push_back(seq.next());
        return record;
    };

    results.push_back(run_property("csv_roundtrip", [&](Property& p) {
        const auto record = make_zero_record(120);
        p.require(parse_csv(to_csv(record)) == record,
                  "csv round trip altered the record");
        p.note("120 terms, values beyond 64 bits included");
    }));

    results.push_back(run_property("json_roundtrip", [&](Property& p) {
        const auto record = make_zero_record(120);
        p.require(parse_json(to_json(record)) == record,
                  "json round trip altered the record");
        SequenceRecord limits;
        limits.name = "f_limit";
        limits.params = {{"from", 0}, {"to", 15}};
        for (long long n = 0; n <= 15; ++n)
            limits.terms.push_back(correction_limit(n));
        p.require(parse_json(to_json(limits)) == limits,
                  "json round trip altered the limit record");
        p.note("zero-count and correction-limit records");
    }));

    results.push_back(run_property("bfile_stability", [&](Property& p) {
        const auto record = make_zero_record(40);
        const std::string first = to_bfile(record);
        p.require(first == to_bfile(record), "bfile emission is not stable");
        std::istringstream lines(first);
        std::string line;
        long long position = 0;
        while (std::getline(lines, line)) {
            ++position;
            std::istringstream fields(line);
            long long index;
            std::string value;
            p.require(static_cast<bool>(fields >> index >> value) &&
                          index == position,
                      "bfile line " + std::to_string(position) + " malformed");
        }
        p.require(position == 40, "bfile emitted a wrong number of lines");
        p.note("40 lines, 1-based indices");
    }));

    results.push_back(run_property("parse_rejects_malformed", [](Property& p) {
        const char* bad_csv = "index,value\n1,1\n";  // missing carrier line
        try {
            parse_csv(bad_csv);
            p.fail("csv parser accepted input without a carrier line");
        } catch (const std::invalid_argument&) {
        }
        try {
            parse_json("{\"name\":\"B0\"}");
            p.fail("json parser accepted an incomplete object");
        } catch (const std::invalid_argument&) {
        }
        p.note("carrier line and required keys enforced");
    }));

    return results;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "all", "oracle", "recurrence", "bijections", "prefix", "golden"};
    return names;
}

std::vector<PropertyResult> run_suite(const std::string& suite,
                                      const VerifyGrid& grid) {
    if (suite == "oracle") return run_oracle_suite(grid);
    if (suite == "recurrence") return run_recurrence_suite(grid);
    if (suite == "bijections") return run_bijection_suite(grid);
    if (suite == "prefix") return run_prefix_suite(grid);
    if (suite == "golden") return run_golden_suite();
    if (suite == "all") {
        std::vector<PropertyResult> all;
        for (auto* runner : {&run_core_suite, &run_oracle_suite,
                             &run_recurrence_suite, &run_bijection_suite,
                             &run_prefix_suite})
            for (auto& result : (*runner)(grid))
                all.push_back(std::move(result));
        for (auto& result : run_golden_suite()) all.push_back(std::move(result));
        for (auto& result : run_io_suite()) all.push_back(std::move(result));
        return all;
    }
    throw std::invalid_argument("unknown suite \"" + suite +
                                "\"; expected all, oracle, recurrence, "
                                "bijections, prefix or golden");
}

bool all_passed(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return r.passed; });
}

}  // namespace fibrep
