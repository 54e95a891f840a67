#include "fibrep/enumerate.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fibrep {

namespace {

void check_length(const char* who, int k, int max_k) {
    if (k < 1 || k > max_k)
        throw std::invalid_argument(std::string(who) + ": length must be in 1.." +
                                    std::to_string(max_k) + ", got " +
                                    std::to_string(k));
}

// The DP state is (digits left, remaining value).  With i digits left the
// finishable remainders lie in +-(F_{i+2} - 1), so anything outside is cut
// and every stored remainder fits in 64 bits.  Arithmetic runs in 128 bits
// because the transient r +- F_i can leave the int64 range near i = 90.
class PrunedCounter {
  public:
    explicit PrunedCounter(int k)
        : fibs_(detail::fib_table_ll(k + 2)), cap_(static_cast<size_t>(k) + 1) {
        for (int i = 0; i <= k; ++i) cap_[i] = fibs_[i + 2] - 1;
    }

    BigInt ways(int digits_left, __int128 remainder) {
        if (digits_left == 0) return remainder == 0 ? 1 : 0;
        const long long cap = cap_[static_cast<size_t>(digits_left)];
        if (remainder > cap || remainder < -cap) return 0;
        const Key key{digits_left, static_cast<long long>(remainder)};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const __int128 f = fibs_[static_cast<size_t>(digits_left)];
        BigInt total = ways(digits_left - 1, remainder - f) +
                       ways(digits_left - 1, remainder) +
                       ways(digits_left - 1, remainder + f);
        memo_.emplace(key, total);
        return total;
    }

  private:
    using Key = std::pair<int, long long>;

    std::vector<long long> fibs_;
    std::vector<long long> cap_;
    std::map<Key, BigInt> memo_;
};

bool pattern_extends(const PrefixPattern& shorter, const PrefixPattern& longer) {
    if (shorter.length() > longer.length()) return false;
    for (int j = 0; j < shorter.length(); ++j)
        if (shorter.digit_from_msb(j) != longer.digit_from_msb(j)) return false;
    return true;
}

void validate_prefix_set(const std::vector<PrefixPattern>& prefixes, int k) {
    for (const auto& p : prefixes) {
        if (p.length() == 0)
            throw std::invalid_argument("prefix filter contains an empty pattern");
        if (p.length() > k)
            throw std::invalid_argument("prefix pattern " + p.str() +
                                        " is longer than the representation (" +
                                        std::to_string(k) + " digits)");
    }
    for (size_t a = 0; a < prefixes.size(); ++a)
        for (size_t b = a + 1; b < prefixes.size(); ++b)
            if (pattern_extends(prefixes[a], prefixes[b]) ||
                pattern_extends(prefixes[b], prefixes[a]))
                throw std::invalid_argument(
                    "prefix patterns " + prefixes[a].str() + " and " +
                    prefixes[b].str() + " overlap; counts would intersect");
}

// Walks all 3^k digit strings in odometer order, keeping the running sum
// incrementally (stepping a digit up adds F_i, a rollover subtracts 2 F_i).
// Calls visit(sum) once per string.
template <typename Visit>
void sweep_all_strings(int k, Visit visit) {
    const auto fibs = detail::fib_table_ll(k + 2);
    std::vector<int> digit(static_cast<size_t>(k) + 1, -1);
    long long sum = 0;
    for (int i = 1; i <= k; ++i) sum -= fibs[static_cast<size_t>(i)];
    for (;;) {
        visit(sum);
        int i = 1;
        while (i <= k && digit[static_cast<size_t>(i)] == 1) {
            digit[static_cast<size_t>(i)] = -1;
            sum -= 2 * fibs[static_cast<size_t>(i)];
            ++i;
        }
        if (i > k) return;
        ++digit[static_cast<size_t>(i)];
        sum += fibs[static_cast<size_t>(i)];
    }
}

}  // namespace

std::vector<Representation> enumerate_representations(long long n, int k) {
    check_length("enumerate_representations", k, 90);
    const auto fibs = detail::fib_table_ll(k + 2);
    std::vector<long long> cap(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) cap[static_cast<size_t>(i)] = fibs[i + 2] - 1;

    std::vector<Representation> out;
    std::vector<Digit> scratch(static_cast<size_t>(k), Digit::zero);
    // Digits are chosen top down, trying T, 0, 1 at each position, so the
    // completed strings appear in ascending digit order (T < 0 < 1).
    auto descend = [&](auto&& self, int i, __int128 remainder) -> void {
        if (i == 0) {
            if (remainder == 0)
                out.push_back(Representation::from_lsb_digits(scratch));
            return;
        }
        if (remainder > cap[static_cast<size_t>(i)] ||
            remainder < -cap[static_cast<size_t>(i)])
            return;
        const __int128 f = fibs[static_cast<size_t>(i)];
        for (Digit d : {Digit::minus, Digit::zero, Digit::plus}) {
            scratch[static_cast<size_t>(i) - 1] = d;
            self(self, i - 1, remainder - digit_value(d) * f);
        }
    };
    descend(descend, k, n);
    return out;
}

BigInt count_brute(long long n, int k) {
    check_length("count_brute", k, 39);
    unsigned long long hits = 0;
    sweep_all_strings(k, [&](long long sum) { hits += (sum == n); });
    return BigInt(static_cast<unsigned long>(hits));
}

BigInt count_pruned(long long n, int k) {
    check_length("count_pruned", k, 90);
    PrunedCounter counter(k);
    return counter.ways(k, n);
}

BigInt count_with_prefixes(long long n, int k,
                           const std::vector<PrefixPattern>& prefixes) {
    check_length("count_with_prefixes", k, 90);
    validate_prefix_set(prefixes, k);
    const auto fibs = detail::fib_table_ll(k + 2);
    PrunedCounter counter(k);
    BigInt total = 0;
    for (const auto& p : prefixes) {
        __int128 remainder = n;
        for (int j = 0; j < p.length(); ++j)
            remainder -= static_cast<__int128>(digit_value(p.digit_from_msb(j))) *
                         fibs[static_cast<size_t>(k - j)];
        total += counter.ways(k - p.length(), remainder);
    }
    return total;
}

std::map<long long, unsigned long long> value_histogram(int k) {
    check_length("value_histogram", k, 39);
    // Dense array over the reachable range, folded into a map afterwards.
    const long long cap = detail::fib_table_ll(k + 2)[static_cast<size_t>(k) + 2] - 1;
    std::vector<unsigned long long> counts(static_cast<size_t>(2 * cap + 1), 0);
    sweep_all_strings(k, [&](long long sum) { ++counts[static_cast<size_t>(sum + cap)]; });
    std::map<long long, unsigned long long> histogram;
    for (long long v = -cap; v <= cap; ++v)
        if (auto c = counts[static_cast<size_t>(v + cap)]; c != 0)
            histogram.emplace(v, c);
    return histogram;
}

BigInt run_count(const CountQuery& query) {
    if (query.prefix_filter.empty()) {
        return query.mode == CountMode::pruned
                   ? count_pruned(query.target, query.length)
                   : count_brute(query.target, query.length);
    }
    if (query.mode == CountMode::pruned)
        return count_with_prefixes(query.target, query.length,
                                   query.prefix_filter);
    check_length("run_count", query.length, 39);
    validate_prefix_set(query.prefix_filter, query.length);
    unsigned long long hits = 0;
    for (const auto& r : enumerate_representations(query.target, query.length))
        for (const auto& p : query.prefix_filter)
            if (starts_with(r, p)) {
                ++hits;
                break;
            }
    return BigInt(static_cast<unsigned long>(hits));
}

}  // namespace fibrep
