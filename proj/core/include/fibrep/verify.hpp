#ifndef FIBREP_VERIFY_HPP
#define FIBREP_VERIFY_HPP

// Property suites tying the independent computation routes together.
//
// Each suite returns one result per named property; a failing result
// carries the first counterexample found.  The suites are pure checks:
// nothing here mutates library state beyond the shared caches.

#include <string>
#include <vector>

namespace fibrep {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::string detail;  // counterexample on failure, scope note on success
};

// Grid bounds for the exhaustive checks.  The defaults cover the
// ranges the properties are stated over; shrink them for quick runs.
struct VerifyGrid {
    int oracle_n_max = 60;
    int oracle_k_max = 12;
    int recurrence_n_max = 40;
    int recurrence_k_max = 14;
    int bijection_n_max = 30;
    int bijection_k_max = 12;
    int prefix_k_min = 3;
    int prefix_k_max = 12;
    int stabilization_n_max = 60;

    // Applies a blanket override: caps every n bound at n_max and
    // every k bound at k_max when the arguments are positive.
    void clamp(int n_max, int k_max);
};

std::vector<PropertyResult> run_core_suite(const VerifyGrid& grid);
std::vector<PropertyResult> run_oracle_suite(const VerifyGrid& grid);
std::vector<PropertyResult> run_recurrence_suite(const VerifyGrid& grid);
std::vector<PropertyResult> run_bijection_suite(const VerifyGrid& grid);
std::vector<PropertyResult> run_prefix_suite(const VerifyGrid& grid);
std::vector<PropertyResult> run_golden_suite();
std::vector<PropertyResult> run_io_suite();

// Suites selectable from the command line.
const std::vector<std::string>& suite_names();

// Dispatch by name; "all" is the union of every suite above, including
// the core and io checks that have no standalone selector.  Unknown
// names throw std::invalid_argument.
std::vector<PropertyResult> run_suite(const std::string& suite,
                                      const VerifyGrid& grid);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace fibrep

#endif
