#include "fibrep/fib.hpp"
#include "fibrep/representation.hpp"
#include "fibrep/zeckendorf.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

using namespace fibrep;

TEST_SUITE("fib") {

TEST_CASE("small values and the defining recurrence") {
    CHECK(fib(1) == 1);
    CHECK(fib(2) == 1);
    CHECK(fib(3) == 2);
    CHECK(fib(10) == 55);
    CHECK(fib(30) == 832040);
    for (int i = 3; i <= 120; ++i) CHECK(fib(i) == fib(i - 1) + fib(i - 2));
}

TEST_CASE("large values stay exact") {
    // F_93 is the first Fibonacci number past int64.
    CHECK(fib(92) == BigInt("7540113804746346429"));
    CHECK(fib(93) == BigInt("12200160415121876738"));
    CHECK(fib(200) == BigInt("280571172992510140037611932413038677189525"));
}

TEST_CASE("index must be positive") {
    CHECK_THROWS_AS(fib(0), std::invalid_argument);
    CHECK_THROWS_AS(fib(-3), std::invalid_argument);
}

TEST_CASE("prefix sums telescope") {
    CHECK(fib_prefix_sum(0) == 0);
    CHECK(fib_prefix_sum(1) == 1);
    CHECK(fib_prefix_sum(2) == 2);
    CHECK(fib_prefix_sum(3) == 4);
    CHECK(fib_prefix_sum(10) == 143);
    BigInt running = 0;
    for (int i = 1; i <= 60; ++i) {
        running += fib(i);
        CHECK(fib_prefix_sum(i) == running);
    }
}

TEST_CASE("int64 table mirrors the bigint values") {
    const auto table = detail::fib_table_ll(detail::max_fib_index_ll);
    REQUIRE(table.size() == static_cast<size_t>(detail::max_fib_index_ll) + 1);
    for (int i = 1; i <= detail::max_fib_index_ll; ++i)
        CHECK(fib(i) == static_cast<long>(table[i]));
    CHECK_THROWS_AS(detail::fib_table_ll(detail::max_fib_index_ll + 1),
                    std::invalid_argument);
}

}  // TEST_SUITE("fib")

TEST_SUITE("representation") {

TEST_CASE("parse, print, evaluate") {
    const auto r = Representation::parse("1T0");
    CHECK(r.length() == 3);
    CHECK(r.digit(3) == Digit::plus);
    CHECK(r.digit(2) == Digit::minus);
    CHECK(r.digit(1) == Digit::zero);
    CHECK(r.top() == Digit::plus);
    CHECK(r.str() == "1T0");
    CHECK(evaluate(r) == 1);
}

TEST_CASE("evaluation sums weighted digits") {
    CHECK(evaluate(Representation::parse("T1101")) == 1);  // -5+3+2+0+1
    CHECK(evaluate(Representation::parse("0")) == 0);
    CHECK(evaluate(Representation::parse("00000")) == 0);
    CHECK(evaluate(Representation::parse("111")) == 4);
    CHECK(evaluate(Representation::parse("TTT")) == -4);
    // All-ones of length k reaches the prefix-sum cap exactly.
    CHECK(evaluate(Representation::parse(std::string(12, '1'))) ==
          fib_prefix_sum(12));
}

TEST_CASE("leading zeros are significant") {
    const auto a = Representation::parse("11");
    const auto b = Representation::parse("0011");
    CHECK(evaluate(a) == evaluate(b));
    CHECK(a != b);
    CHECK(a.length() == 2);
    CHECK(b.length() == 4);
}

TEST_CASE("parse rejects junk with a position") {
    CHECK_THROWS_AS(Representation::parse(""), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Representation::parse("1x0"),
                         doctest::Contains("position 2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(Representation::parse("-10"), std::invalid_argument);
}

TEST_CASE("digit accessor bounds") {
    const auto r = Representation::parse("10T");
    CHECK_THROWS_AS(r.digit(0), std::out_of_range);
    CHECK_THROWS_AS(r.digit(4), std::out_of_range);
}

TEST_CASE("msb and lsb constructors agree") {
    const std::vector<Digit> msb = {Digit::plus, Digit::zero, Digit::minus};
    const std::vector<Digit> lsb = {Digit::minus, Digit::zero, Digit::plus};
    CHECK(Representation::from_msb_digits(msb) ==
          Representation::from_lsb_digits(lsb));
    CHECK(Representation::from_msb_digits(msb).str() == "10T");
}

TEST_CASE("negation flips the value and is an involution") {
    for (const char* text : {"0", "1", "T", "10T", "T1101", "0011T"}) {
        const auto r = Representation::parse(text);
        CHECK(evaluate(negated(r)) == -evaluate(r));
        CHECK(negated(negated(r)) == r);
    }
}

TEST_CASE("ordering is length first, then top-down digit value") {
    const auto parse = [](const char* s) { return Representation::parse(s); };
    CHECK(parse("1") < parse("00"));   // shorter first
    CHECK(parse("T0") < parse("00"));  // T < 0 at the top
    CHECK(parse("00") < parse("10"));
    CHECK(parse("10") < parse("11"));
    CHECK(parse("1T") < parse("10"));  // second digit decides
    CHECK((parse("10") <=> parse("10")) == std::strong_ordering::equal);
}

TEST_CASE("prefix patterns and starts_with") {
    const auto p = PrefixPattern::parse("1T");
    CHECK(p.length() == 2);
    CHECK(p.digit_from_msb(0) == Digit::plus);
    CHECK(p.digit_from_msb(1) == Digit::minus);
    CHECK(p.str() == "1T");
    CHECK(starts_with(Representation::parse("1T0"), p));
    CHECK(starts_with(Representation::parse("1T"), p));
    CHECK_FALSE(starts_with(Representation::parse("10T"), p));
    CHECK_FALSE(starts_with(Representation::parse("1"), p));
}

TEST_CASE("the six correction prefixes") {
    const auto& ps = correction_prefixes();
    REQUIRE(ps.size() == 6);
    std::vector<std::string> texts;
    for (const auto& p : ps) texts.push_back(p.str());
    CHECK(texts == std::vector<std::string>{"10", "11", "T0", "TT", "1T1",
                                            "T1T"});
}

}  // TEST_SUITE("representation")

TEST_SUITE("zeckendorf") {

TEST_CASE("known decompositions") {
    CHECK(zeckendorf(1).str() == "10");        // F_2
    CHECK(zeckendorf(2).str() == "100");       // F_3
    CHECK(zeckendorf(4).str() == "1010");      // F_4 + F_2
    CHECK(zeckendorf(100).str() == "10000101000");
}

TEST_CASE("round-trips and structural invariants up to 10000") {
    for (long v = 1; v <= 10000; ++v) {
        const auto r = zeckendorf(BigInt(v));
        CHECK(evaluate(r) == v);
        CHECK(r.digit(1) == Digit::zero);
        CHECK(r.top() == Digit::plus);
        for (int i = 1; i < r.length(); ++i) {
            CHECK(r.digit(i) != Digit::minus);
            // no two adjacent ones
            CHECK_FALSE((r.digit(i) == Digit::plus &&
                         r.digit(i + 1) == Digit::plus));
        }
    }
}

TEST_CASE("rejects non-positive input") {
    CHECK_THROWS_AS(zeckendorf(BigInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(zeckendorf(BigInt(-7)), std::invalid_argument);
}

TEST_CASE("handles values past int64") {
    const BigInt big("123456789012345678901234567890");
    CHECK(evaluate(zeckendorf(big)) == big);
}

}  // TEST_SUITE("zeckendorf")
