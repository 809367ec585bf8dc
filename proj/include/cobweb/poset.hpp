#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cobweb/matrix.hpp"
#include "cobweb/seq.hpp"

namespace cobweb {

/// Vertex position in the level grid: 1 <= position <= level_F.
struct GridPoint {
    int level = 1;
    int position = 1;

    bool operator==(const GridPoint&) const = default;
};

/**
 * Cobweb poset denominated by F, truncated to levels 1..n_levels.
 *
 * Level s holds s_F vertices. Vertices are labelled 1, 2, ... from the
 * first level upward and left to right within each level, so level s
 * occupies labels S(s-1)+1 .. S(s). Two distinct vertices are comparable
 * exactly when they sit on different levels.
 */
class CobwebPoset {
public:
    CobwebPoset(FSequence seq, int n_levels);

    /// Fewest levels whose vertices cover labels 1..vertex_count.
    static CobwebPoset covering(FSequence seq, std::size_t vertex_count);

    const FSequence& sequence() const noexcept { return seq_; }
    int n_levels() const noexcept { return static_cast<int>(sizes_.size()); }
    std::size_t vertex_count() const noexcept { return ends_.empty() ? 0 : ends_.back(); }

    std::size_t level_size(int level) const;
    /// First label of the level.
    std::size_t level_begin(int level) const;
    /// Last label of the level, i.e. S(level).
    std::size_t level_end(int level) const;

    int level_of(std::size_t label) const;
    GridPoint coords_of(std::size_t label) const;
    std::size_t label_of(GridPoint point) const;

private:
    void check_level(int level) const;

    FSequence seq_;
    std::vector<std::size_t> sizes_; // sizes_[s-1] = s_F
    std::vector<std::size_t> ends_;  // ends_[s-1] = S(s)
};

/// Ground truth: zeta(x,y) = 1 iff x = y or level(x) < level(y).
BoolMatrix zeta_definitional(const CobwebPoset& poset);
/// Leading V x V block of the ground truth.
BoolMatrix zeta_definitional(const FSequence& seq, std::size_t vertex_count);

/// [x <= y] - [x < y] sum_{n >= 0} [x > S(n)] [y <= S(n+1)]
BoolMatrix zeta_dziemianczuk(const FSequence& seq, std::size_t vertex_count);

/// The two delta-sum halves of zeta = zeta_1 - zeta_0, kept unclamped.
struct ZetaParts {
    RawMatrix zeta1;
    RawMatrix zeta0;

    RawMatrix difference() const;
};

/**
 * Fibonacci-only delta formula over labels:
 *   zeta_1(x,y) = sum_{k>=0} delta(x+k, y)
 *   zeta_0(x,y) = sum_{k>=k_start} sum_{s>=0} delta(x, F_{s+1}+k)
 *                 sum_{r=1}^{F_s-k-1} delta(k+F_{s+1}+r, y)
 * k_start is 0 or 1; only k_start = 0 reproduces the level structure.
 */
ZetaParts kwasniewski_fib_parts(std::size_t vertex_count, int k_start);
/// Throws DomainError if the difference leaves {0,1}.
BoolMatrix zeta_kwasniewski_fib(std::size_t vertex_count, int k_start = 0);

/// zeta_1(x,y) = sum_{k>=0} delta(x+k, y), built from the deltas.
RawMatrix zeta_one(std::size_t vertex_count);

enum class GeneralZetaVariant {
    /// zeta_0 = sum_{s>=1} sum_{k>=1} [x = k + s_F] [1 <= y <= s_F + (s-1)_F - 1]
    knuth_bracket,
    /// zeta_0 = sum_{s>=1} sum_{k>=1} delta(x, k + s_F) sum_{r=1}^{(s-1)_F-k-1} delta(x+r, y)
    shifted_delta,
};

struct Mismatch {
    std::size_t x = 0; // label
    std::size_t y = 0; // label
    long expected = 0;
    long got = 0;
};

/// Cell-by-cell differences, scanning row-major over labels.
std::vector<Mismatch> compare(const RawMatrix& expected, const RawMatrix& got);
/// One "(x, y, expected, got)" line per mismatch, then a summary count.
std::string format_mismatch_report(std::string_view title, const std::vector<Mismatch>& mismatches);

struct GeneralZetaReport {
    GeneralZetaVariant variant;
    RawMatrix raw; // zeta_1 - zeta_0, no clamping
    std::vector<Mismatch> mismatches; // raw vs zeta_definitional
};

/// Upside-down rewrite of the delta formula for arbitrary F. Every infinite
/// sum (over s and k) is cut at the matrix dimension.
GeneralZetaReport zeta_kwasniewski_general(const FSequence& seq, std::size_t vertex_count,
                                           GeneralZetaVariant variant =
                                               GeneralZetaVariant::knuth_bracket);

/// Upper bound s_F + (s-1)_F - 1 used by the bracket form.
Integer knuth_bound(const FSequence& seq, int s);

/// Level adjacency A_F: all-ones blocks from level s to level s+1.
BoolMatrix adjacency_blocks(const FSequence& seq, int n_levels);
/// I + A + A^2 + ... under the Boolean product; stops at the first zero power.
BoolMatrix zeta_blocks(const FSequence& seq, int n_levels);

/// delta(s,u) delta(t,v) + sum_{k>=1} delta(t+k, v) on grid points.
int zeta_krot_grid(const FSequence& seq, GridPoint x, GridPoint y);
BoolMatrix zeta_krot_grid_matrix(const CobwebPoset& poset);

/// Exact inverse of an upper-unitriangular 0/1 matrix.
IntMatrix mobius_from_zeta(const BoolMatrix& zeta);

/// Readings of the product in the closed-form Moebius function.
enum class KrotParse {
    /// prod_{i=t+1}^{v-1} (F_i - 1)
    each_minus_one,
    /// (prod_{i=t+1}^{v-1} F_i) - 1
    product_minus_one,
    /// prod_{i=t+1}^{v-1} (i-1)_F, with the k = 1 term folded into the sum
    rewritten,
};

std::optional<KrotParse> parse_krot(std::string_view name);
std::string to_string(KrotParse parse);

Integer mobius_krot(const FSequence& seq, GridPoint x, GridPoint y,
                    KrotParse parse = KrotParse::each_minus_one);
IntMatrix mobius_krot_matrix(const CobwebPoset& poset, KrotParse parse = KrotParse::each_minus_one);

enum class RenderStyle { ascii, pgm, csv };

std::optional<RenderStyle> parse_render_style(std::string_view name);

/**
 * Renders a 0/1 matrix.
 *
 * ascii: staircase rows; '1' on the diagonal, '-' for ones off it, '0' for
 *        zeros above it, blanks below it; cells separated by one space.
 * pgm:   plain "P1" bitmap, 1 = relation present.
 * csv:   comma-separated 0/1 rows.
 */
std::string render_la_scala(const BoolMatrix& zeta, RenderStyle style);

std::string to_csv(const RawMatrix& m);
std::string to_csv(const IntMatrix& m);

} // namespace cobweb
