#include <doctest.h>

#include "cobweb/connection.hpp"
#include "cobweb/errors.hpp"
#include "cobweb/fnomial.hpp"
#include "oracles.hpp"

using namespace cobweb;

namespace {

/// sum_k c_{n,k} q_k(x), expanded in monomials.
Polynomial expand_row(const ConnectionTable& t, const std::vector<Polynomial>& q_basis, int n)
{
    Polynomial sum;
    for (int k = 0; k <= n; ++k) sum += t.at(n, k) * q_basis[static_cast<std::size_t>(k)];
    return sum;
}

std::vector<std::pair<RootSequence, RootSequence>> root_pairs(int len)
{
    std::vector<std::pair<RootSequence, RootSequence>> out{
        {RootSequence::geometric(2, len), RootSequence::zeros(len)},
        {RootSequence::geometric(3, len), RootSequence::zeros(len)},
        {RootSequence::lucas(len), RootSequence::zeros(len)},
        {RootSequence::zeros(len), RootSequence::zeros(len)},
        {RootSequence::constant(1, len), RootSequence::geometric(Rational(1, 2), len)},
    };
    auto gen = oracle::rng(77);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int i = 0; i < 20; ++i) {
        std::vector<Rational> r(static_cast<std::size_t>(len)), s(static_cast<std::size_t>(len));
        for (auto& v : r) v = d(gen);
        for (auto& v : s) v = d(gen);
        out.emplace_back(RootSequence(r), RootSequence(s));
    }
    return out;
}

} // namespace

TEST_CASE("persistent-root polynomials")
{
    CHECK(persistent_poly(RootSequence({1, 2}), 2).to_string() == "x^2 - 3x + 2");
    CHECK(persistent_poly(RootSequence::lucas(4), 0) == Polynomial::constant(1));
    CHECK(persistent_poly(RootSequence::zeros(3), 3) == Polynomial::monomial(3));
    CHECK_THROWS_AS(persistent_poly(RootSequence::zeros(2), 3), InsufficientPrefix);
    const auto basis = persistent_basis(RootSequence::geometric(2, 5), 5);
    REQUIRE(basis.size() == 6);
    for (int n = 0; n <= 5; ++n) {
        CHECK(basis[static_cast<std::size_t>(n)].degree() == n);
        CHECK(basis[static_cast<std::size_t>(n)].is_monic());
    }
}

TEST_CASE("root sequence rules")
{
    const RootSequence lucas = RootSequence::lucas(5);
    CHECK(lucas.terms() == std::vector<Rational>{0, 2, -3, -8, -63});
    CHECK(RootSequence::geometric(2, 4).terms() == std::vector<Rational>{1, 2, 4, 8});
    CHECK(lucas.at(1) == 0);
    CHECK_THROWS_AS(lucas.at(6), InsufficientPrefix);
    CHECK_THROWS_AS(lucas.at(0), InsufficientPrefix);
}

TEST_CASE("Lah tables")
{
    const int n = 8;
    const ConnectionTable gauss = lah_table(RootSequence::geometric(2, n), RootSequence::zeros(n), n);
    CHECK(gauss.at(4, 2) == 35);
    CHECK(ccc(gauss, 4) == 67);
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= i; ++k) CHECK(gauss.at(i, k) == Rational(fnomial(FSequence::gaussian(2), i, k)));

    const ConnectionTable trivial = lah_table(RootSequence::zeros(n), RootSequence::zeros(n), n);
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= n; ++k) CHECK(trivial.at(i, k) == (i == k ? 1 : 0));

    const ConnectionTable lucas = lah_table(RootSequence::lucas(6), RootSequence::zeros(6), 6);
    std::vector<Rational> sums;
    for (int i = 1; i <= 6; ++i) sums.push_back(ccc(lucas, i));
    CHECK(sums == std::vector<Rational>{1, 3, 4, 7, 11, 18});
    CHECK(ccc(lucas, 0) == 1);
    CHECK_THROWS_AS(ccc(lucas, 7), IndexOutOfRange);
    CHECK_THROWS_AS(lah_table(RootSequence::zeros(3), RootSequence::zeros(5), 5), InsufficientPrefix);
}

TEST_CASE("Lah recurrence equals the back-substitution oracle")
{
    const int n = 12;
    for (const auto& [r, s] : root_pairs(n)) {
        const ConnectionTable lah = lah_table(r, s, n);
        const auto p = persistent_basis(s, n);
        const auto q = persistent_basis(r, n);
        CHECK(lah == connection_oracle(p, q, n));
        for (int i = 0; i <= n; ++i) CHECK(expand_row(lah, q, i) == p[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("ccc stepping matches row sums")
{
    const int n = 12;
    for (const auto& [r, s] : root_pairs(n)) {
        const ConnectionTable t = lah_table(r, s, n);
        Rational c = 1;
        for (int i = 0; i < n; ++i) {
            c = ccc_step(t.row(i), r, s, c);
            CHECK(c == ccc(t, i + 1));
        }
    }
    const ConnectionTable lucas = lah_table(RootSequence::lucas(3), RootSequence::zeros(3), 3);
    CHECK(ccc_step(lucas.row(2), RootSequence::lucas(3), RootSequence::zeros(3), 3) == 4);
}

TEST_CASE("connection oracle examples and errors")
{
    std::vector<Polynomial> mono, falling;
    Polynomial f = Polynomial::constant(1);
    for (int n = 0; n <= 4; ++n) {
        mono.push_back(Polynomial::monomial(n));
        falling.push_back(f);
        f = f * Polynomial::linear_factor(n);
    }
    const auto phi = persistent_basis(RootSequence::geometric(2, 4), 4);
    CHECK(connection_oracle(mono, phi, 3).row(3) == std::vector<Rational>{1, 7, 7, 1});
    CHECK(connection_oracle(mono, falling, 3).row(3) == std::vector<Rational>{0, 1, 3, 1});
    CHECK(connection_oracle(phi, phi, 4) == connection_oracle(mono, mono, 4));

    std::vector<Polynomial> bad = mono;
    bad[2] = Polynomial::monomial(2, 2);
    CHECK_THROWS_AS(connection_oracle(mono, bad, 3), InvalidBasis);
    bad[2] = Polynomial::monomial(3);
    CHECK_THROWS_AS(connection_oracle(mono, bad, 3), InvalidBasis);
    CHECK_THROWS_AS(connection_oracle(bad, mono, 3), InvalidBasis);
}

TEST_CASE("inverse bases")
{
    // ordinary binomials: B_k = (x-1)^k
    const auto b = basis_from_connection(fnomial_connection(FSequence::naturals(), 6));
    Polynomial p = Polynomial::constant(1);
    for (int k = 0; k <= 6; ++k) {
        CHECK(b[static_cast<std::size_t>(k)] == p);
        p = p * Polynomial::linear_factor(1);
    }
    const auto id = basis_from_connection(lah_table(RootSequence::zeros(4), RootSequence::zeros(4), 4));
    for (int k = 0; k <= 4; ++k) CHECK(id[static_cast<std::size_t>(k)] == Polynomial::monomial(k));

    const ConnectionTable fib = fnomial_connection(FSequence::fibonacci(), 5);
    const auto xi = basis_from_connection(fib);
    for (int n = 0; n <= 5; ++n) CHECK(expand_row(fib, xi, n) == Polynomial::monomial(n));

    CHECK_THROWS_AS(basis_from_connection(ConnectionTable({{1}, {1, 0}})), NotUnitriangular);
}

TEST_CASE("round trip through the oracle")
{
    const int n = 10;
    for (const auto& [r, s] : root_pairs(n)) {
        const auto q = persistent_basis(r, n);
        std::vector<Polynomial> mono;
        for (int i = 0; i <= n; ++i) mono.push_back(Polynomial::monomial(i));
        CHECK(basis_from_connection(connection_oracle(mono, q, n)) == q);
    }
}

TEST_CASE("q-Gaussian basis identities")
{
    for (unsigned long q : {2UL, 3UL}) {
        const FSequence g = FSequence::gaussian(q);
        const auto phi = persistent_basis(RootSequence::geometric(q, 13), 13);
        for (int n = 0; n <= 12; ++n) {
            const Rational qn = pow(Rational(q), static_cast<unsigned long>(n));
            CHECK(Polynomial::monomial(1) * phi[static_cast<std::size_t>(n)] ==
                  qn * phi[static_cast<std::size_t>(n)] + phi[static_cast<std::size_t>(n) + 1]);
        }
        for (int k = 0; k <= 10; ++k) {
            Polynomial rhs;
            for (int l = 0; l <= k; ++l) {
                Rational c(fnomial(g, k, l) * pow(Integer(q), static_cast<unsigned long>(l * (l - 1) / 2)));
                if (l % 2) c = -c;
                rhs += Polynomial::monomial(k - l, c);
            }
            CHECK(phi[static_cast<std::size_t>(k)] == rhs);
        }
    }
}

TEST_CASE("Stirling and Bell numbers against enumeration")
{
    CHECK(stirling2(4, 2) == 7);
    CHECK(bell(4) == 15);
    for (int n = 0; n <= 9; ++n) {
        const auto parts = oracle::partitions_by_blocks(n);
        Integer total = 0;
        for (int k = 0; k <= n; ++k) {
            CHECK(stirling2(n, k) == parts[static_cast<std::size_t>(k)]);
            total += parts[static_cast<std::size_t>(k)];
        }
        CHECK(bell(n) == total);
    }
    for (int n = 0; n <= 8; ++n) {
        const auto cycles = oracle::permutations_by_cycles(n);
        for (int k = 0; k <= n; ++k)
            CHECK(stirling1_unsigned(n, k) == (n == 0 ? (k == 0 ? 1 : 0) : cycles[static_cast<std::size_t>(k)]));
    }
    Integer factorial = 1;
    for (int n = 0; n <= 10; ++n) {
        if (n) factorial *= n;
        Integer sum = 0;
        for (int k = 0; k <= n; ++k) sum += stirling1_unsigned(n, k);
        CHECK(sum == factorial);
    }
    CHECK_THROWS_AS(stirling2(-1, 0), DomainError);
}

TEST_CASE("Bell identity")
{
    const BellIdentity three = bell_identity(3);
    CHECK(three.lhs == 15);
    CHECK(three.rhs == 15);
    CHECK(three.holds);
    CHECK(bell_identity_check(0));
    for (int n = 0; n <= 10; ++n) CHECK(bell_identity_check(n));
}

TEST_CASE("root solver")
{
    const int n = 12;
    const RootSequence zeros = RootSequence::zeros(n);
    std::vector<Rational> powers, ones, fib;
    const auto f = oracle::fibonacci(n);
    for (int i = 0; i <= n; ++i) {
        powers.emplace_back(pow(Integer(2), static_cast<unsigned long>(i)));
        ones.emplace_back(1);
        fib.emplace_back(i == 0 ? mpz_class(1) : f[static_cast<std::size_t>(i)]);
    }
    CHECK(solve_root_sequence(powers, zeros).terms() == std::vector<Rational>(n, 1));
    CHECK(solve_root_sequence(ones, zeros).terms() == std::vector<Rational>(n, 0));
    const RootSequence r = solve_root_sequence(fib, zeros);
    CHECK(std::vector<Rational>(r.terms().begin(), r.terms().begin() + 5) ==
          std::vector<Rational>{0, 0, 1, 0, 1});
    const ConnectionTable t = lah_table(r, zeros, n);
    for (int i = 0; i <= n; ++i) CHECK(ccc(t, i) == fib[static_cast<std::size_t>(i)]);

    CHECK_THROWS_AS(solve_root_sequence(std::vector<Rational>{2, 3}, zeros), InvalidParameter);

    auto gen = oracle::rng(9);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> target{1};
        for (int i = 1; i <= 8; ++i) {
            target.emplace_back(d(gen), 1 + trial % 3);
            target.back().canonicalize();
        }
        const RootSequence s = RootSequence::constant(Rational(trial, 2), 8);
        const ConnectionTable tt = lah_table(solve_root_sequence(target, s), s, 8);
        for (int i = 0; i <= 8; ++i) CHECK(ccc(tt, i) == target[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("connection table export")
{
    const ConnectionTable t({{1}, {Rational(-1, 2), 1}});
    CHECK(t.to_csv() == "1\n-1/2,1\n");
    CHECK(t.at(0, 1) == 0);
    CHECK(t.at(1, -1) == 0);
}
