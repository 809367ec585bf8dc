#include <doctest.h>

#include "cobweb/errors.hpp"
#include "cobweb/seq.hpp"
#include "oracles.hpp"

using namespace cobweb;

TEST_CASE("fibonacci terms agree with plain addition up to k = 200")
{
    const auto expected = oracle::fibonacci(200);
    const FSequence fib = FSequence::fibonacci();
    for (int k = 1; k <= 200; ++k) CHECK(fib.term(k) == expected[static_cast<std::size_t>(k)]);
    CHECK(fib.term(0) == 0);
    CHECK(fib.term(10) == 55);
}

TEST_CASE("naturals, constant and gaussian terms")
{
    CHECK(FSequence::naturals().term(7) == 7);
    CHECK(FSequence::constant(3).term(1) == 3);
    CHECK(FSequence::constant(3).term(40) == 3);
    CHECK(FSequence::constant(3).term(0) == 3);

    const FSequence g2 = FSequence::gaussian(2);
    const FSequence g3 = FSequence::gaussian(3);
    for (int k = 1; k <= 60; ++k) {
        mpz_class p2, p3;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(k));
        mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(k));
        CHECK(g2.term(k) == p2 - 1);
        CHECK(g3.term(k) * 2 == p3 - 1);
    }
    CHECK(g2.terms(4) == std::vector<Integer>{g2.zero_term(), 1, 3, 7, 15});
}

TEST_CASE("custom prefix is finite")
{
    const FSequence c = FSequence::custom({1, 2, 3});
    CHECK(c.max_index() == 3);
    CHECK(c.term(3) == 3);
    CHECK(c.zero_term() == 1);
    CHECK_THROWS_AS(c.term(4), IndexOutOfRange);
    CHECK_FALSE(FSequence::fibonacci().max_index().has_value());
}

TEST_CASE("cumulative sums")
{
    const FSequence fib = FSequence::fibonacci();
    // S(n) = F_{n+2} - 1
    const auto f = oracle::fibonacci(60);
    for (int n = 0; n <= 58; ++n) CHECK(cumulative_sum(fib, n) == f[static_cast<std::size_t>(n) + 2] - 1);
    CHECK(cumulative_sum(FSequence::naturals(), 12) == 78);
    CHECK(cumulative_sum(FSequence::naturals(), 0) == 0);
    CHECK(f_term(fib, 8) == 21);
    CHECK_THROWS_AS(cumulative_sum(fib, -1), IndexOutOfRange);
}

TEST_CASE("invalid parameters and indices")
{
    CHECK_THROWS_AS(FSequence::gaussian(1), InvalidParameter);
    CHECK_THROWS_AS(FSequence::gaussian(0), InvalidParameter);
    CHECK_THROWS_AS(FSequence::constant(0), InvalidParameter);
    CHECK_THROWS_AS(FSequence::custom({1, 0, 2}), InvalidParameter);
    CHECK_THROWS_AS(FSequence::naturals().term(-1), IndexOutOfRange);
    CHECK_THROWS_AS(FSequence::gaussian(2).term_size(200), DomainError);
}

TEST_CASE("descriptors round-trip")
{
    for (const char* d : {"naturals", "fibonacci", "gaussian:2", "gaussian:7", "constant:4",
                          "custom:1,1,2,6"}) {
        const FSequence s = make_sequence(d);
        CHECK(s.descriptor() == d);
        CHECK(make_sequence(s.descriptor()) == s);
    }
    CHECK(make_sequence("gaussian:3").kind() == SequenceKind::gaussian);
    CHECK(make_sequence("gaussian:3").parameter() == 3);
}

TEST_CASE("malformed descriptors are rejected")
{
    for (const char* d : {"", "Fibonacci", "gaussian", "gaussian:", "gaussian:x", "gaussian:1",
                          "constant:0", "custom:", "custom:1,,2", "custom:1,-2", "lucas:3"})
        CHECK_THROWS_AS(make_sequence(d), InvalidParameter);
}
