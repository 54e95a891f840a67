#include "fibrep/bijections.hpp"

#include "fibrep/enumerate.hpp"

#include <cstdlib>
#include <stdexcept>

namespace fibrep {

namespace {

using D = Digit;

struct Top3 {
    D a, b, c;  // most significant first
};

Top3 top3(const Representation& r) {
    const int m = r.length();
    return {r.digit(m), r.digit(m - 1), r.digit(m - 2)};
}

[[noreturn]] void reject(const std::string& what, const Representation& r) {
    throw std::invalid_argument(what + " (representation " + r.str() + ")");
}

}  // namespace

const char* prefix_class_name(PrefixClass c) {
    switch (c) {
        case PrefixClass::leading_zero: return "leading_zero";
        case PrefixClass::plus_minus_zero: return "plus_minus_zero";
        case PrefixClass::minus_plus_zero: return "minus_plus_zero";
        case PrefixClass::plus_minus_minus: return "plus_minus_minus";
        case PrefixClass::minus_plus_plus: return "minus_plus_plus";
        case PrefixClass::forbidden_pair: return "forbidden_pair";
        case PrefixClass::forbidden_triple: return "forbidden_triple";
        case PrefixClass::stable_pair: return "stable_pair";
    }
    std::abort();  // unreachable for a valid enum value
}

PrefixClass classify_prefix(const Representation& r) {
    if (r.length() < 3)
        reject("classify_prefix needs at least three digits", r);
    const auto [a, b, c] = top3(r);
    if (a == D::zero) return PrefixClass::leading_zero;
    if (a == D::plus && b == D::minus) {
        if (c == D::zero) return PrefixClass::plus_minus_zero;
        if (c == D::minus) return PrefixClass::plus_minus_minus;
        return PrefixClass::forbidden_triple;  // 1 T 1
    }
    if (a == D::minus && b == D::plus) {
        if (c == D::zero) return PrefixClass::minus_plus_zero;
        if (c == D::plus) return PrefixClass::minus_plus_plus;
        return PrefixClass::forbidden_triple;  // T 1 T
    }
    // Top pair is one of 10, 11, T0, TT.
    return PrefixClass::forbidden_pair;
}

PrefixClass classify_prefix_fine(const Representation& r) {
    const PrefixClass coarse = classify_prefix(r);
    if (coarse != PrefixClass::forbidden_pair) return coarse;
    const auto [a, b, c] = top3(r);
    if (b == D::zero && ((a == D::plus && c == D::minus) ||
                         (a == D::minus && c == D::plus)))
        return PrefixClass::stable_pair;
    return coarse;
}

Representation strip_prefix(const Representation& r) {
    if (r.length() < 4)
        reject("strip_prefix needs at least four digits", r);
    const PrefixClass c = classify_prefix(r);
    std::vector<Digit> digits = r.lsb_digits();
    switch (c) {
        case PrefixClass::leading_zero:
            digits.pop_back();
            break;
        case PrefixClass::plus_minus_zero:
            digits.resize(digits.size() - 3);
            digits.push_back(D::plus);
            break;
        case PrefixClass::minus_plus_zero:
            digits.resize(digits.size() - 3);
            digits.push_back(D::minus);
            break;
        case PrefixClass::plus_minus_minus:
            digits.resize(digits.size() - 3);
            digits.push_back(D::zero);
            break;
        case PrefixClass::minus_plus_plus:
            digits.resize(digits.size() - 3);
            break;
        default:
            reject(std::string("strip_prefix has no map for class ") +
                       prefix_class_name(c),
                   r);
    }
    return Representation::from_lsb_digits(std::move(digits));
}

Representation restore_prefix(const Representation& r, PrefixClass target) {
    std::vector<Digit> digits = r.lsb_digits();
    switch (target) {
        case PrefixClass::leading_zero:
            if (r.length() < 3)
                reject("restore_prefix(leading_zero) needs length >= 3", r);
            digits.push_back(D::zero);
            break;
        case PrefixClass::plus_minus_zero:
            if (r.length() < 2 || r.top() != D::plus)
                reject("restore_prefix(plus_minus_zero) needs a leading 1 "
                       "and length >= 2",
                       r);
            digits.back() = D::zero;
            digits.push_back(D::minus);
            digits.push_back(D::plus);
            break;
        case PrefixClass::minus_plus_zero:
            if (r.length() < 2 || r.top() != D::minus)
                reject("restore_prefix(minus_plus_zero) needs a leading T "
                       "and length >= 2",
                       r);
            digits.back() = D::zero;
            digits.push_back(D::plus);
            digits.push_back(D::minus);
            break;
        case PrefixClass::plus_minus_minus:
            if (r.length() < 2 || r.top() != D::zero)
                reject("restore_prefix(plus_minus_minus) needs a leading 0 "
                       "and length >= 2",
                       r);
            digits.back() = D::minus;
            digits.push_back(D::minus);
            digits.push_back(D::plus);
            break;
        case PrefixClass::minus_plus_plus:
            if (r.length() < 1)
                reject("restore_prefix(minus_plus_plus) needs length >= 1", r);
            digits.push_back(D::plus);
            digits.push_back(D::plus);
            digits.push_back(D::minus);
            break;
        default:
            reject(std::string("restore_prefix has no map for class ") +
                       prefix_class_name(target),
                   r);
    }
    return Representation::from_lsb_digits(std::move(digits));
}

Representation drop_stable_digit(const Representation& r) {
    if (r.length() < 3 || classify_prefix_fine(r) != PrefixClass::stable_pair)
        reject("drop_stable_digit needs a 10T or T01 opening", r);
    std::vector<Digit> digits = r.lsb_digits();
    digits.erase(digits.end() - 3);  // the third digit from the top
    return Representation::from_lsb_digits(std::move(digits));
}

Representation insert_stable_digit(const Representation& r) {
    const int m = r.length();
    if (m < 2 || r.digit(m - 1) != D::zero ||
        (r.top() != D::plus && r.top() != D::minus))
        reject("insert_stable_digit needs a 10 or T0 opening", r);
    std::vector<Digit> digits = r.lsb_digits();
    const D inserted = r.top() == D::plus ? D::minus : D::plus;
    digits.insert(digits.end() - 2, inserted);
    return Representation::from_lsb_digits(std::move(digits));
}

bool check_zero_forbidden_prefixes(int k) {
    for (const auto& r : enumerate_representations(0, k))
        for (const auto& p : correction_prefixes())
            if (starts_with(r, p)) return false;
    return true;
}

}  // namespace fibrep
