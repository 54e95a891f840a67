#ifndef FIBREP_REPRESENTATION_HPP
#define FIBREP_REPRESENTATION_HPP

// Digit strings over {-1, 0, +1} weighted by Fibonacci numbers.
//
// A representation of length k assigns a digit to each of F_1 .. F_k and
// denotes the sum digit_i * F_i.  Leading zeros are significant: "0011"
// and "11" are distinct representations of 2.  Text form is written most
// significant digit first with 'T' for -1, so "1T0" reads F_3 - F_2 = 1.
//
// Storage is least significant digit first (index i holds the multiplier
// of F_{i+1}), which keeps append-at-the-top cheap for the prefix maps.

#include "fibrep/fib.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fibrep {

enum class Digit : signed char { minus = -1, zero = 0, plus = 1 };

constexpr int digit_value(Digit d) { return static_cast<int>(d); }

constexpr char digit_char(Digit d) {
    return d == Digit::minus ? 'T' : (d == Digit::zero ? '0' : '1');
}

// Accepts 'T' / '0' / '1'; anything else throws std::invalid_argument.
Digit digit_from_char(char c);

class Representation {
  public:
    Representation() = default;

    // Text is most significant digit first, e.g. "01T".  Empty text and
    // characters outside {T,0,1} are rejected.
    static Representation parse(std::string_view text);

    // digits[i] multiplies F_{i+1} (least significant first).
    static Representation from_lsb_digits(std::vector<Digit> digits);

    // digits[0] is the most significant (top) digit.
    static Representation from_msb_digits(const std::vector<Digit>& digits);

    int length() const { return static_cast<int>(digits_.size()); }

    // Digit multiplying F_i, 1 <= i <= length().
    Digit digit(int i) const;

    // Most significant digit, digit(length()).  Undefined on empty.
    Digit top() const { return digits_.back(); }

    const std::vector<Digit>& lsb_digits() const { return digits_; }

    // Most significant digit first, matching parse().
    std::string str() const;

    bool operator==(const Representation&) const = default;

    // Orders by length, then by numeric digit value from the top down.
    // Equal-length strings compare in ascending represented value when
    // they share a Fibonacci target, which fixes the enumeration order.
    std::strong_ordering operator<=>(const Representation& other) const;

  private:
    explicit Representation(std::vector<Digit> digits)
        : digits_(std::move(digits)) {}

    std::vector<Digit> digits_;
};

// A short digit pattern anchored at the most significant end of a
// representation.  Stored most significant first, like its text form.
class PrefixPattern {
  public:
    PrefixPattern() = default;

    static PrefixPattern parse(std::string_view text);

    int length() const { return static_cast<int>(digits_.size()); }

    // 0-based offset from the most significant digit.
    Digit digit_from_msb(int j) const;

    std::string str() const;

    bool operator==(const PrefixPattern&) const = default;

  private:
    explicit PrefixPattern(std::vector<Digit> digits)
        : digits_(std::move(digits)) {}

    std::vector<Digit> digits_;
};

// Value denoted by r: sum over i of digit(i) * F_i.
BigInt evaluate(const Representation& r);

// Digit-wise negation; evaluate(negated(r)) == -evaluate(r).
Representation negated(const Representation& r);

// True when r is at least as long as p and r's top digits equal p.
bool starts_with(const Representation& r, const PrefixPattern& p);

// The six prefixes whose representation counts make up the correction
// term of the length recurrence: 10, 11, T0, TT, 1T1, T1T.
const std::vector<PrefixPattern>& correction_prefixes();

}  // namespace fibrep

#endif
