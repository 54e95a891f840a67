#ifndef FIBREP_BIJECTIONS_HPP
#define FIBREP_BIJECTIONS_HPP

// Prefix taxonomy and the value-preserving prefix maps.
//
// Classify a representation by its most significant digits.  Five
// classes admit a strip map onto a strictly shorter representation of
// the same value, and together those maps account for every zero
// representation, which is what drives the pure length recurrence:
//
//     [0 tail]     ->  [tail]       length k,   identity on the value
//     [1 T 0 tail] ->  [1 tail]     length k-1  (F_{k+1} - F_k = F_{k-1})
//     [T 1 0 tail] ->  [T tail]     length k-1
//     [1 T T tail] ->  [0 tail]     length k-1
//     [T 1 1 tail] ->  [tail]       length k-2
//
// The remaining prefixes (10, 11, T0, TT, 1T1, T1T) never open a zero
// representation; for other targets they are exactly what the length
// recurrence's correction term counts.  Among them the pair 10 (and its
// negation T0) contains the stable triple 10T (T01), whose third digit
// can be dropped without changing the value (F_{k+1} - F_{k-1} = F_k);
// that map is what freezes the correction term at large lengths.

#include "fibrep/representation.hpp"

namespace fibrep {

enum class PrefixClass {
    leading_zero,      // top digit 0
    plus_minus_zero,   // 1 T 0
    minus_plus_zero,   // T 1 0
    plus_minus_minus,  // 1 T T
    minus_plus_plus,   // T 1 1
    forbidden_pair,    // 10, 11, T0 or TT on top (absent from target 0)
    forbidden_triple,  // 1 T 1 or T 1 T
    stable_pair,       // 1 0 T or T 0 1, split out of forbidden_pair
};

const char* prefix_class_name(PrefixClass c);

// Class of r by its top digits.  Never returns stable_pair; the 10T and
// T01 openings report as forbidden_pair, matching the correction term's
// bookkeeping.  Throws std::invalid_argument when r has fewer than
// three digits, where the triple patterns are not observable.
PrefixClass classify_prefix(const Representation& r);

// As classify_prefix, but refines forbidden_pair to stable_pair when
// the top three digits are 1 0 T or T 0 1.
PrefixClass classify_prefix_fine(const Representation& r);

// Applies the strip map of r's class.  Requires length >= 4 and one of
// the five strippable classes; throws std::invalid_argument otherwise.
// The result denotes the same value and is shorter by 1 (leading_zero),
// 2 (the three-digit classes ending in 0 or T) or 3 (minus_plus_plus),
// matching the three terms of the length recurrence.
Representation strip_prefix(const Representation& r);

// Inverse of strip_prefix onto the given class.  The input must look
// like a strip result of that class (top digit 1 for plus_minus_zero,
// T for minus_plus_zero, 0 for plus_minus_minus) and be long enough
// that the restored representation has length >= 4.
Representation restore_prefix(const Representation& r, PrefixClass target);

// [1 0 T tail] -> [1 0 tail] and [T 0 1 tail] -> [T 0 tail]; requires
// classify_prefix_fine(r) == stable_pair.  Shortens by one digit,
// preserves the value.
Representation drop_stable_digit(const Representation& r);

// Inverse: requires the top pair 1 0 or T 0 and length >= 2; inserts
// the third digit that drop_stable_digit removed.
Representation insert_stable_digit(const Representation& r);

// Enumerates the length-k representations of 0 and confirms none opens
// with a correction prefix.  The counting side of the forbidden
// classes, kept as an executable check.
bool check_zero_forbidden_prefixes(int k);

}  // namespace fibrep

#endif
