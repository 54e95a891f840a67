#include "fibrep/representation.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibrep {

Digit digit_from_char(char c) {
    switch (c) {
        case 'T': return Digit::minus;
        case '0': return Digit::zero;
        case '1': return Digit::plus;
        default:
            throw std::invalid_argument(std::string("bad digit character '") +
                                        c + "', expected T, 0 or 1");
    }
}

namespace {

std::vector<Digit> parse_digits(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty digit string");
    std::vector<Digit> digits;
    digits.reserve(text.size());
    for (size_t pos = 0; pos < text.size(); ++pos) {
        try {
            digits.push_back(digit_from_char(text[pos]));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument(
                std::string("bad digit character '") + text[pos] +
                "' at position " + std::to_string(pos + 1));
        }
    }
    return digits;
}

}  // namespace

Representation Representation::parse(std::string_view text) {
    std::vector<Digit> digits = parse_digits(text);
    std::reverse(digits.begin(), digits.end());
    return Representation(std::move(digits));
}

Representation Representation::from_lsb_digits(std::vector<Digit> digits) {
    return Representation(std::move(digits));
}

Representation Representation::from_msb_digits(const std::vector<Digit>& digits) {
    return Representation(std::vector<Digit>(digits.rbegin(), digits.rend()));
}

Digit Representation::digit(int i) const {
    if (i < 1 || i > length())
        throw std::out_of_range("digit index " + std::to_string(i) +
                                " outside 1.." + std::to_string(length()));
    return digits_[static_cast<size_t>(i) - 1];
}

std::string Representation::str() const {
    std::string out;
    out.reserve(digits_.size());
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it)
        out.push_back(digit_char(*it));
    return out;
}

std::strong_ordering Representation::operator<=>(
    const Representation& other) const {
    if (auto c = length() <=> other.length(); c != 0) return c;
    for (int i = length(); i >= 1; --i) {
        auto c = digit_value(digit(i)) <=> digit_value(other.digit(i));
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

PrefixPattern PrefixPattern::parse(std::string_view text) {
    return PrefixPattern(parse_digits(text));
}

Digit PrefixPattern::digit_from_msb(int j) const {
    if (j < 0 || j >= length())
        throw std::out_of_range("prefix offset " + std::to_string(j) +
                                " outside 0.." + std::to_string(length() - 1));
    return digits_[static_cast<size_t>(j)];
}

std::string PrefixPattern::str() const {
    std::string out;
    out.reserve(digits_.size());
    for (Digit d : digits_) out.push_back(digit_char(d));
    return out;
}

BigInt evaluate(const Representation& r) {
    const int k = r.length();
    if (k <= detail::max_fib_index_ll - 2) {
        // Partial sums stay within +-(F_{k+2} - 1), inside int64 here.
        static thread_local std::vector<long long> table;
        if (static_cast<int>(table.size()) <= k)
            table = detail::fib_table_ll(std::max(k, 16));
        long long sum = 0;
        const auto& digits = r.lsb_digits();
        for (int i = 1; i <= k; ++i)
            sum += digit_value(digits[static_cast<size_t>(i) - 1]) * table[i];
        return BigInt(static_cast<long>(sum));
    }
    BigInt sum = 0;
    const auto& digits = r.lsb_digits();
    for (int i = 1; i <= k; ++i) {
        int d = digit_value(digits[static_cast<size_t>(i) - 1]);
        if (d == 1)
            sum += fib(i);
        else if (d == -1)
            sum -= fib(i);
    }
    return sum;
}

Representation negated(const Representation& r) {
    std::vector<Digit> digits = r.lsb_digits();
    for (Digit& d : digits)
        d = static_cast<Digit>(-digit_value(d));
    return Representation::from_lsb_digits(std::move(digits));
}

bool starts_with(const Representation& r, const PrefixPattern& p) {
    if (r.length() < p.length()) return false;
    for (int j = 0; j < p.length(); ++j)
        if (r.digit(r.length() - j) != p.digit_from_msb(j)) return false;
    return true;
}

const std::vector<PrefixPattern>& correction_prefixes() {
    static const std::vector<PrefixPattern> prefixes = {
        PrefixPattern::parse("10"),  PrefixPattern::parse("11"),
        PrefixPattern::parse("T0"),  PrefixPattern::parse("TT"),
        PrefixPattern::parse("1T1"), PrefixPattern::parse("T1T"),
    };
    return prefixes;
}

}  // namespace fibrep
