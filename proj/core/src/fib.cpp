#include "fibrep/fib.hpp"

#include <mutex>
#include <stdexcept>

namespace fibrep {

namespace {

std::mutex fib_mutex;
// values[i] = F_{i+1}; grown on demand, never shrunk.
std::vector<BigInt> fib_values = {BigInt(1), BigInt(1)};

}  // namespace

BigInt fib(int index) {
    if (index < 1)
        throw std::invalid_argument("fib: index must be >= 1, got " +
                                    std::to_string(index));
    std::lock_guard<std::mutex> lock(fib_mutex);
    while (static_cast<int>(fib_values.size()) < index) {
        auto sz = fib_values.size();
        fib_values.push_back(fib_values[sz - 1] + fib_values[sz - 2]);
    }
    return fib_values[index - 1];
}

BigInt fib_prefix_sum(int count) {
    if (count < 0)
        throw std::invalid_argument("fib_prefix_sum: count must be >= 0");
    if (count == 0) return 0;
    return fib(count + 2) - 1;
}

namespace detail {

std::vector<long long> fib_table_ll(int max_index) {
    if (max_index < 1 || max_index > max_fib_index_ll)
        throw std::invalid_argument("fib_table_ll: index out of int64 range");
    std::vector<long long> table(static_cast<size_t>(max_index) + 1, 0);
    table[1] = 1;
    if (max_index >= 2) table[2] = 1;
    for (int i = 3; i <= max_index; ++i) table[i] = table[i - 1] + table[i - 2];
    return table;
}

}  // namespace detail

}  // namespace fibrep
