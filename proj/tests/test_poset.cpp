#include <doctest.h>

#include "cobweb/errors.hpp"
#include "cobweb/poset.hpp"
#include "oracles.hpp"

#include <map>

using namespace cobweb;

namespace {

std::vector<FSequence> three_sequences()
{
    return {FSequence::naturals(), FSequence::fibonacci(), FSequence::gaussian(2)};
}

std::vector<int> level_table(const FSequence& seq, std::size_t v)
{
    std::vector<std::size_t> sizes;
    for (int s = 1; s <= 40; ++s) sizes.push_back(static_cast<std::size_t>(seq.term(s).get_ui()));
    return oracle::levels_of_labels(sizes, v);
}

bool equals_oracle(const BoolMatrix& z, const std::vector<std::vector<int>>& expected)
{
    if (z.rows() != expected.size()) return false;
    for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j)
            if (z(i, j) != expected[i][j]) return false;
    return true;
}

/// mu(x,x) = 1, mu(x,y) = -sum_{x<=z<y, z<=y} mu(x,z), straight from the definition.
std::vector<std::vector<long>> mobius_by_recursion(const std::vector<std::vector<int>>& zeta)
{
    const std::size_t v = zeta.size();
    std::vector<std::vector<long>> mu(v, std::vector<long>(v, 0));
    for (std::size_t x = 0; x < v; ++x) {
        mu[x][x] = 1;
        for (std::size_t y = x + 1; y < v; ++y) {
            if (!zeta[x][y]) continue;
            long sum = 0;
            for (std::size_t z = x; z < y; ++z)
                if (zeta[x][z] && zeta[z][y]) sum += mu[x][z];
            mu[x][y] = -sum;
        }
    }
    return mu;
}

} // namespace

TEST_CASE("labels and grid coordinates")
{
    const CobwebPoset fib(FSequence::fibonacci(), 5);
    CHECK(fib.vertex_count() == 12);
    CHECK(fib.coords_of(3) == GridPoint{3, 1});
    CHECK(fib.coords_of(1) == GridPoint{1, 1});
    CHECK(fib.coords_of(12) == GridPoint{5, 5});
    CHECK(fib.level_begin(4) == 5);
    CHECK(fib.level_end(4) == 7);
    CHECK(fib.level_size(5) == 5);
    CHECK(CobwebPoset(FSequence::gaussian(2), 3).coords_of(5) == GridPoint{3, 1});

    for (const FSequence& seq : three_sequences()) {
        const CobwebPoset p = CobwebPoset::covering(seq, 90);
        CHECK(p.vertex_count() >= 90);
        const auto level = level_table(seq, p.vertex_count());
        for (std::size_t x = 1; x <= p.vertex_count(); ++x) {
            CHECK(p.level_of(x) == level[x]);
            CHECK(p.label_of(p.coords_of(x)) == x);
        }
    }
    CHECK_THROWS_AS(fib.coords_of(0), IndexOutOfRange);
    CHECK_THROWS_AS(fib.coords_of(13), IndexOutOfRange);
    CHECK_THROWS_AS(fib.label_of({3, 3}), IndexOutOfRange);
    CHECK_THROWS_AS(fib.level_size(6), IndexOutOfRange);
    CHECK_THROWS_AS(CobwebPoset(FSequence::fibonacci(), 0), DomainError);
}

TEST_CASE("covering picks the fewest levels")
{
    CHECK(CobwebPoset::covering(FSequence::fibonacci(), 54).n_levels() == 8);
    CHECK(CobwebPoset::covering(FSequence::fibonacci(), 55).n_levels() == 9);
    CHECK(CobwebPoset::covering(FSequence::naturals(), 90).n_levels() == 13);
}

TEST_CASE("definitional zeta")
{
    const BoolMatrix z = zeta_definitional(FSequence::fibonacci(), 12);
    CHECK(z(2, 3) == 0); // labels 3,4
    CHECK(z(1, 4) == 1); // labels 2,5
    for (std::size_t i = 0; i < 12; ++i) CHECK(z(i, i) == 1);
    for (const FSequence& seq : three_sequences())
        CHECK(equals_oracle(zeta_definitional(seq, 90), oracle::zeta_from_levels(level_table(seq, 90))));
}

TEST_CASE("zeta depends only on the level pair")
{
    for (const FSequence& seq : three_sequences()) {
        const CobwebPoset p = CobwebPoset::covering(seq, 90);
        const BoolMatrix z = zeta_definitional(seq, 90);
        std::map<std::pair<int, int>, int> seen;
        bool consistent = true;
        for (std::size_t x = 1; x <= 90; ++x)
            for (std::size_t y = 1; y <= 90; ++y) {
                if (x == y) continue;
                const auto key = std::pair{p.level_of(x), p.level_of(y)};
                const auto [it, inserted] = seen.emplace(key, z(x - 1, y - 1));
                consistent = consistent && (inserted || it->second == z(x - 1, y - 1));
            }
        CHECK(consistent);
    }
}

TEST_CASE("zeta constructions agree with the definition")
{
    for (const FSequence& seq : three_sequences()) {
        const BoolMatrix oracle = zeta_definitional(seq, 90);
        CHECK(zeta_dziemianczuk(seq, 90) == oracle);
        const CobwebPoset p = CobwebPoset::covering(seq, 90);
        CHECK(zeta_blocks(seq, p.n_levels()).principal(90) == oracle);
        const BoolMatrix grid = zeta_krot_grid_matrix(p);
        CHECK(grid.principal(90) == oracle);
    }
    CHECK(zeta_kwasniewski_fib(54, 0) == zeta_definitional(FSequence::fibonacci(), 54));
    CHECK(zeta_blocks(FSequence::fibonacci(), 5) == zeta_definitional(CobwebPoset(FSequence::fibonacci(), 5)));
}

TEST_CASE("Fibonacci delta-sum formula details")
{
    const BoolMatrix z = zeta_kwasniewski_fib(54, 0);
    // label 8 opens level 5 of size F_5 = 5
    for (std::size_t y = 9; y <= 12; ++y) CHECK(z(7, y - 1) == 0);
    CHECK(z(7, 12) == 1);

    const RawMatrix one = zeta_one(30);
    for (std::size_t i = 0; i < 30; ++i)
        for (std::size_t j = 0; j < 30; ++j) CHECK(one(i, j) == (i <= j ? 1 : 0));

    // with k >= 1 the first vertex of each level stays related to its siblings
    const BoolMatrix from_one = zeta_kwasniewski_fib(54, 1);
    CHECK_FALSE(from_one == z);
    CHECK(from_one(7, 8) == 1);

    const ZetaParts parts = kwasniewski_fib_parts(20, 0);
    CHECK(parts.difference() == to_raw(zeta_definitional(FSequence::fibonacci(), 20)));
    CHECK_THROWS_AS(zeta_kwasniewski_fib(10, -1), InvalidParameter);
}

TEST_CASE("general upside-down formula produces a deterministic report")
{
    const FSequence fib = FSequence::fibonacci();
    for (auto variant : {GeneralZetaVariant::knuth_bracket, GeneralZetaVariant::shifted_delta}) {
        const GeneralZetaReport a = zeta_kwasniewski_general(fib, 54, variant);
        const GeneralZetaReport b = zeta_kwasniewski_general(fib, 54, variant);
        CHECK(a.raw == b.raw);
        CHECK(a.mismatches.size() == b.mismatches.size());
        CHECK(a.mismatches.size() == compare(to_raw(zeta_definitional(fib, 54)), a.raw).size());
        const std::string report = format_mismatch_report("fib", a.mismatches);
        CHECK(report.find("mismatches: " + std::to_string(a.mismatches.size())) != std::string::npos);
    }
    // zeta_1 still gives the diagonal for a constant-1 sequence
    const GeneralZetaReport c = zeta_kwasniewski_general(FSequence::constant(1), 12);
    for (std::size_t i = 0; i < 12; ++i) CHECK(c.raw(i, i) == 1);

    // s_F + (s-1)_F - 1 falls one short of (s+1)_F on Fibonacci
    for (int s = 2; s <= 30; ++s) CHECK(knuth_bound(fib, s) == fib.term(s + 1) - 1);
}

TEST_CASE("mismatch listing format")
{
    RawMatrix a(2, 2, 0), b(2, 2, 0);
    b(0, 1) = 2;
    const auto m = compare(a, b);
    REQUIRE(m.size() == 1);
    CHECK(m[0].x == 1);
    CHECK(m[0].y == 2);
    CHECK(format_mismatch_report("t", m).find("(1, 2, 0, 2)") != std::string::npos);
    CHECK_THROWS_AS(compare(a, RawMatrix(3, 3)), InvalidParameter);
}

TEST_CASE("adjacency blocks are nilpotent")
{
    const BoolMatrix a = adjacency_blocks(FSequence::fibonacci(), 5);
    BoolMatrix power = a;
    for (int k = 2; k <= 5; ++k) {
        power = boolean_product(power, a);
        CHECK(is_zero(power) == (k >= 5));
    }
}

TEST_CASE("grid zeta cases")
{
    const FSequence fib = FSequence::fibonacci();
    CHECK(zeta_krot_grid(fib, {4, 1}, {4, 2}) == 0);
    CHECK(zeta_krot_grid(fib, {4, 2}, {4, 2}) == 1);
    CHECK(zeta_krot_grid(fib, {2, 1}, {5, 3}) == 1);
    CHECK(zeta_krot_grid(fib, {5, 1}, {2, 1}) == 0);
    CHECK_THROWS_AS(zeta_krot_grid(fib, {3, 3}, {4, 1}), InvalidParameter);
}

TEST_CASE("Moebius matrix is the exact inverse")
{
    for (const FSequence& seq : three_sequences()) {
        const BoolMatrix z = zeta_definitional(seq, 60);
        const IntMatrix mu = mobius_from_zeta(z);
        const IntMatrix zi = to_integer(z);
        CHECK(multiply(mu, zi) == IntMatrix::identity(60));
        CHECK(multiply(zi, mu) == IntMatrix::identity(60));
        const auto rec = mobius_by_recursion(oracle::zeta_from_levels(level_table(seq, 60)));
        for (std::size_t i = 0; i < 60; ++i)
            for (std::size_t j = 0; j < 60; ++j) CHECK(mu(i, j) == rec[i][j]);
    }
    const IntMatrix mu = mobius_from_zeta(zeta_definitional(FSequence::fibonacci(), 12));
    CHECK(mu(1, 4) == 1);
    CHECK(mu(0, 1) == -1);
    CHECK(mu(5, 5) == 1);

    BoolMatrix bad = BoolMatrix::identity(3);
    bad(2, 0) = 1;
    CHECK_THROWS_AS(mobius_from_zeta(bad), NotUnitriangular);
    bad = BoolMatrix::identity(3);
    bad(1, 1) = 0;
    CHECK_THROWS_AS(mobius_from_zeta(bad), NotUnitriangular);
}

TEST_CASE("closed-form Moebius")
{
    const FSequence fib = FSequence::fibonacci();
    for (auto parse : {KrotParse::each_minus_one, KrotParse::product_minus_one, KrotParse::rewritten}) {
        CHECK(mobius_krot(fib, {3, 2}, {4, 1}, parse) == -1);
        CHECK(mobius_krot(fib, {4, 3}, {4, 3}, parse) == 1);
        CHECK(mobius_krot(fib, {4, 1}, {4, 3}, parse) == 0);
    }
    CHECK(mobius_krot(fib, {2, 1}, {5, 4}) == -2);

    for (const FSequence& seq : {FSequence::fibonacci(), FSequence::naturals()}) {
        const CobwebPoset p(seq, 7);
        const IntMatrix inverse = mobius_from_zeta(zeta_definitional(p));
        CHECK(mobius_krot_matrix(p) == inverse);
    }
    const CobwebPoset p(fib, 7);
    const IntMatrix inverse = mobius_from_zeta(zeta_definitional(p));
    const IntMatrix rewritten = mobius_krot_matrix(p, KrotParse::rewritten);
    const std::size_t x = p.level_begin(4);
    const std::size_t y = p.level_begin(6);
    CHECK(inverse(x - 1, y - 1) == fib.term(5) - 1);
    CHECK(rewritten(x - 1, y - 1) == fib.term(4));
    CHECK(mobius_krot_matrix(CobwebPoset(FSequence::naturals(), 7), KrotParse::rewritten) ==
          mobius_from_zeta(zeta_definitional(CobwebPoset(FSequence::naturals(), 7))));

    CHECK(parse_krot("each-minus-one") == KrotParse::each_minus_one);
    CHECK(to_string(KrotParse::rewritten) == "rewritten");
    CHECK_FALSE(parse_krot("nope").has_value());
}

TEST_CASE("La Scala rendering")
{
    CHECK(render_la_scala(BoolMatrix::identity(1), RenderStyle::ascii) == "1\n");
    CHECK(render_la_scala(BoolMatrix::identity(1), RenderStyle::pgm) == "P1\n1 1\n1\n");
    const BoolMatrix z = zeta_definitional(FSequence::fibonacci(), 4);
    CHECK(render_la_scala(z, RenderStyle::ascii) == "1 - - -\n  1 - -\n    1 0\n      1\n");
    CHECK(render_la_scala(z, RenderStyle::csv) == "1,1,1,1\n0,1,1,1\n0,0,1,0\n0,0,0,1\n");
    CHECK(parse_render_style("pgm") == RenderStyle::pgm);
    CHECK_FALSE(parse_render_style("png").has_value());

    // zero runs on level-opening rows
    const FSequence fib = FSequence::fibonacci();
    const CobwebPoset p(fib, 8);
    const std::string text = render_la_scala(zeta_definitional(p), RenderStyle::ascii);
    std::vector<std::string> lines;
    for (std::size_t pos = 0, nl; (nl = text.find('\n', pos)) != std::string::npos; pos = nl + 1)
        lines.push_back(text.substr(pos, nl - pos));
    REQUIRE(lines.size() == 54);
    for (int s = 1; s <= 8; ++s) {
        const std::string& row = lines[p.level_begin(s) - 1];
        std::size_t i = 2 * (p.level_begin(s) - 1) + 2;
        long zeros = 0;
        while (i < row.size() && row[i] == '0') {
            ++zeros;
            i += 2;
        }
        CHECK(zeros == fib.term(s) - 1);
    }
}
