#include "fibrep/recurrence.hpp"

#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fibrep {

const char* correction_source_name(CorrectionSource source) {
    switch (source) {
        case CorrectionSource::seed: return "seed";
        case CorrectionSource::oracle: return "oracle";
        case CorrectionSource::limit: return "limit";
    }
    std::abort();  // unreachable for a valid enum value
}

BigInt ZeroSequence::next() {
    BigInt value;
    switch (next_k_) {
        case 1: value = 1; break;
        case 2: value = 3; break;
        case 3: value = 5; break;
        default: value = window_[0] + window_[1] + window_[2]; break;
    }
    window_[0] = window_[1];
    window_[1] = window_[2];
    window_[2] = value;
    ++next_k_;
    return value;
}

BigInt count_zero(int k) {
    if (k < 1)
        throw std::invalid_argument("count_zero: length must be >= 1, got " +
                                    std::to_string(k));
    ZeroSequence seq;
    BigInt value;
    for (int i = 1; i <= k; ++i) value = seq.next();
    return value;
}

BigInt correction_term(long long n, int k) {
    if (k < 1)
        throw std::invalid_argument("correction_term: length must be >= 1, got " +
                                    std::to_string(k));
    std::vector<PrefixPattern> fitting;
    for (const auto& p : correction_prefixes())
        if (p.length() <= k) fitting.push_back(p);
    if (fitting.empty()) return 0;
    return count_with_prefixes(n, k, fitting);
}

int stabilization_bound(long long n) {
    // Magnitude through mpz so LLONG_MIN negates cleanly.
    BigInt magnitude = abs(BigInt(static_cast<long>(n)));
    int length = 5;
    while (fib(length - 4) < magnitude + 1) ++length;
    return length + 1;
}

namespace {

std::mutex limit_mutex;
std::map<long long, BigInt> limit_cache;

BigInt correction_limit_locked(long long n) {
    if (auto it = limit_cache.find(n); it != limit_cache.end())
        return it->second;
    if (n == std::numeric_limits<long long>::min())
        throw std::invalid_argument("correction_limit: target out of range");
    if (n < 0) {
        // The six prefixes are closed under digit negation, so the
        // correction is even in n.  Spot-check that before reusing the
        // positive entry.
        for (int k = 3; k <= 8; ++k)
            if (correction_term(n, k) != correction_term(-n, k))
                throw std::logic_error(
                    "correction_term lost its sign symmetry at n = " +
                    std::to_string(n) + ", k = " + std::to_string(k));
        BigInt value = correction_limit_locked(-n);
        limit_cache.emplace(n, value);
        return value;
    }
    const int bound = stabilization_bound(n);
    BigInt value = correction_term(n, bound);
    // The bound is derived, not assumed: demand agreement just past it.
    for (int k = bound + 1; k <= bound + 2; ++k)
        if (correction_term(n, k) != value)
            throw std::logic_error(
                "correction term still moving past its stabilization bound "
                "at n = " + std::to_string(n) + ", k = " + std::to_string(k));
    limit_cache.emplace(n, value);
    return value;
}

}  // namespace

BigInt correction_limit(long long n) {
    std::lock_guard<std::mutex> lock(limit_mutex);
    return correction_limit_locked(n);
}

int first_stable_index(long long n) {
    const BigInt limit = correction_limit(n);
    int k = stabilization_bound(n);
    while (k > 3 && correction_term(n, k - 1) == limit) --k;
    return k;
}

CountSequence::CountSequence(long long n)
    : target_(n), bound_(stabilization_bound(n)) {}

CountSequence::Term CountSequence::next() {
    Term term;
    term.k = next_k_;
    if (next_k_ <= 3) {
        term.value = count_pruned(target_, next_k_);
        term.correction = 0;
        term.source = CorrectionSource::seed;
    } else {
        if (next_k_ < bound_) {
            term.correction = correction_term(target_, next_k_);
            term.source = CorrectionSource::oracle;
        } else {
            term.correction = correction_limit(target_);
            term.source = CorrectionSource::limit;
        }
        term.value = window_[0] + window_[1] + window_[2] + term.correction;
    }
    window_[0] = window_[1];
    window_[1] = window_[2];
    window_[2] = term.value;
    ++next_k_;
    return term;
}

BigInt count_general(long long n, int k) {
    if (k < 1)
        throw std::invalid_argument("count_general: length must be >= 1, got " +
                                    std::to_string(k));
    CountSequence seq(n);
    BigInt value;
    for (int i = 1; i <= k; ++i) value = seq.next().value;
    return value;
}

}  // namespace fibrep
