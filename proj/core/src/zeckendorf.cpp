#include "fibrep/zeckendorf.hpp"

#include <stdexcept>

namespace fibrep {

Representation zeckendorf(const BigInt& n) {
    if (n <= 0)
        throw std::invalid_argument("zeckendorf: input must be positive");
    // Smallest index (>= 2) with fib(index) > remaining residue.
    int top = 2;
    while (fib(top) <= n) ++top;
    std::vector<Digit> digits(static_cast<size_t>(top - 1), Digit::zero);
    BigInt residue = n;
    int i = top - 1;
    while (residue > 0) {
        if (i < 2)
            throw std::logic_error("zeckendorf: residue survived the scan");
        if (fib(i) <= residue) {
            digits[static_cast<size_t>(i) - 1] = Digit::plus;
            residue -= fib(i);
            i -= 2;  // greedy choice never takes adjacent indices
        } else {
            --i;
        }
    }
    return Representation::from_lsb_digits(std::move(digits));
}

}  // namespace fibrep
