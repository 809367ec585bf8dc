#include "cobweb/poset.hpp"

#include <algorithm>
#include <sstream>

#include "cobweb/errors.hpp"

namespace cobweb {

CobwebPoset::CobwebPoset(FSequence seq, int n_levels) : seq_(std::move(seq))
{
    if (n_levels < 1) throw DomainError("a cobweb poset needs at least one level");
    std::size_t end = 0;
    for (int s = 1; s <= n_levels; ++s) {
        const std::size_t size = seq_.term_size(s);
        end += size;
        sizes_.push_back(size);
        ends_.push_back(end);
    }
}

CobwebPoset CobwebPoset::covering(FSequence seq, std::size_t vertex_count)
{
    int levels = 1;
    std::size_t total = seq.term_size(1);
    while (total < vertex_count) total += seq.term_size(++levels);
    return CobwebPoset(std::move(seq), levels);
}

void CobwebPoset::check_level(int level) const
{
    if (level < 1 || level > n_levels())
        throw IndexOutOfRange("level " + std::to_string(level) + " outside 1.." +
                              std::to_string(n_levels()));
}

std::size_t CobwebPoset::level_size(int level) const
{
    check_level(level);
    return sizes_[static_cast<std::size_t>(level) - 1];
}

std::size_t CobwebPoset::level_begin(int level) const
{
    return level_end(level) - level_size(level) + 1;
}

std::size_t CobwebPoset::level_end(int level) const
{
    check_level(level);
    return ends_[static_cast<std::size_t>(level) - 1];
}

int CobwebPoset::level_of(std::size_t label) const
{
    if (label < 1 || label > vertex_count())
        throw IndexOutOfRange("label " + std::to_string(label) + " outside 1.." +
                              std::to_string(vertex_count()));
    auto it = std::lower_bound(ends_.begin(), ends_.end(), label);
    return static_cast<int>(it - ends_.begin()) + 1;
}

GridPoint CobwebPoset::coords_of(std::size_t label) const
{
    const int level = level_of(label);
    return {level, static_cast<int>(label - level_begin(level) + 1)};
}

std::size_t CobwebPoset::label_of(GridPoint point) const
{
    check_level(point.level);
    if (point.position < 1 || static_cast<std::size_t>(point.position) > level_size(point.level))
        throw IndexOutOfRange("position " + std::to_string(point.position) + " outside level " +
                              std::to_string(point.level));
    return level_begin(point.level) + static_cast<std::size_t>(point.position) - 1;
}

BoolMatrix zeta_definitional(const CobwebPoset& poset)
{
    const std::size_t v = poset.vertex_count();
    std::vector<int> level(v + 1);
    for (std::size_t x = 1; x <= v; ++x) level[x] = poset.level_of(x);

    BoolMatrix zeta(v, v, 0);
    for (std::size_t x = 1; x <= v; ++x)
        for (std::size_t y = 1; y <= v; ++y)
            zeta(x - 1, y - 1) = (x == y || level[x] < level[y]) ? 1 : 0;
    return zeta;
}

BoolMatrix zeta_definitional(const FSequence& seq, std::size_t vertex_count)
{
    return zeta_definitional(CobwebPoset::covering(seq, vertex_count)).principal(vertex_count);
}

BoolMatrix zeta_dziemianczuk(const FSequence& seq, std::size_t vertex_count)
{
    // S(0), S(1), ... up to the first value that reaches V.
    std::vector<Integer> partial{Integer(0)};
    for (int n = 1; partial.back() < vertex_count; ++n) partial.push_back(partial.back() + seq.term(n));

    BoolMatrix zeta(vertex_count, vertex_count, 0);
    for (std::size_t x = 1; x <= vertex_count; ++x)
        for (std::size_t y = 1; y <= vertex_count; ++y) {
            long sum = 0;
            for (std::size_t n = 0; n + 1 < partial.size(); ++n)
                if (partial[n] < x && y <= partial[n + 1]) ++sum;
            const long value = (x <= y ? 1 : 0) - (x < y ? 1 : 0) * sum;
            if (value != 0 && value != 1)
                throw DomainError("Dziemianczuk entry (" + std::to_string(x) + "," +
                                  std::to_string(y) + ") = " + std::to_string(value));
            zeta(x - 1, y - 1) = static_cast<std::uint8_t>(value);
        }
    return zeta;
}

RawMatrix ZetaParts::difference() const
{
    RawMatrix out(zeta1.rows(), zeta1.cols(), 0);
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = zeta1(i, j) - zeta0(i, j);
    return out;
}

RawMatrix zeta_one(std::size_t vertex_count)
{
    RawMatrix z(vertex_count, vertex_count, 0);
    for (std::size_t x = 1; x <= vertex_count; ++x)
        for (std::size_t k = 0; x + k <= vertex_count; ++k) z(x - 1, x + k - 1) += 1;
    return z;
}

ZetaParts kwasniewski_fib_parts(std::size_t vertex_count, int k_start)
{
    if (k_start < 0) throw InvalidParameter("k_start must be 0 or 1");
    const FSequence fib = FSequence::fibonacci();
    const long v = static_cast<long>(vertex_count);

    ZetaParts parts{zeta_one(vertex_count), RawMatrix(vertex_count, vertex_count, 0)};
    for (int s = 0; fib.term(s + 1) <= v; ++s) {
        const long f_s = fib.term(s).get_si();
        const long f_next = fib.term(s + 1).get_si();
        for (long k = k_start; f_next + k <= v; ++k) {
            const long x = f_next + k;
            for (long r = 1; r <= f_s - k - 1; ++r) {
                const long y = k + f_next + r;
                if (y > v) break;
                parts.zeta0(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(y - 1)) += 1;
            }
        }
    }
    return parts;
}

BoolMatrix zeta_kwasniewski_fib(std::size_t vertex_count, int k_start)
{
    const RawMatrix raw = kwasniewski_fib_parts(vertex_count, k_start).difference();
    BoolMatrix zeta(vertex_count, vertex_count, 0);
    for (std::size_t i = 0; i < vertex_count; ++i)
        for (std::size_t j = 0; j < vertex_count; ++j) {
            if (raw(i, j) != 0 && raw(i, j) != 1)
                throw DomainError("delta-sum formula left {0,1} at (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")");
            zeta(i, j) = static_cast<std::uint8_t>(raw(i, j));
        }
    return zeta;
}

Integer knuth_bound(const FSequence& seq, int s)
{
    return seq.term(s) + seq.term(s - 1) - 1;
}

std::vector<Mismatch> compare(const RawMatrix& expected, const RawMatrix& got)
{
    if (expected.rows() != got.rows() || expected.cols() != got.cols())
        throw InvalidParameter("compare: shape mismatch");
    std::vector<Mismatch> out;
    for (std::size_t i = 0; i < expected.rows(); ++i)
        for (std::size_t j = 0; j < expected.cols(); ++j)
            if (expected(i, j) != got(i, j)) out.push_back({i + 1, j + 1, expected(i, j), got(i, j)});
    return out;
}

std::string format_mismatch_report(std::string_view title, const std::vector<Mismatch>& mismatches)
{
    std::ostringstream os;
    os << title << '\n';
    for (const auto& m : mismatches)
        os << "(" << m.x << ", " << m.y << ", " << m.expected << ", " << m.got << ")\n";
    os << "mismatches: " << mismatches.size() << '\n';
    return os.str();
}

GeneralZetaReport zeta_kwasniewski_general(const FSequence& seq, std::size_t vertex_count,
                                           GeneralZetaVariant variant)
{
    const long v = static_cast<long>(vertex_count);
    RawMatrix zeta0(vertex_count, vertex_count, 0);

    for (long s = 1; s <= v; ++s) {
        const Integer s_f = seq.term(static_cast<int>(s));
        if (s_f >= v) continue; // x = k + s_F with k >= 1 falls outside
        const long start = s_f.get_si();
        const Integer prev_f = seq.term(static_cast<int>(s - 1));
        for (long k = 1; k + start <= v; ++k) {
            const long x = k + start;
            if (variant == GeneralZetaVariant::knuth_bracket) {
                const Integer bound = s_f + prev_f - 1;
                const long last = bound < v ? bound.get_si() : v;
                for (long y = 1; y <= last; ++y)
                    zeta0(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(y - 1)) += 1;
            } else {
                const Integer bound = prev_f - k - 1;
                const long last = bound < v ? bound.get_si() : v;
                for (long r = 1; r <= last && x + r <= v; ++r)
                    zeta0(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(x + r - 1)) += 1;
            }
        }
    }

    ZetaParts parts{zeta_one(vertex_count), std::move(zeta0)};
    GeneralZetaReport report{variant, parts.difference(), {}};
    report.mismatches = compare(to_raw(zeta_definitional(seq, vertex_count)), report.raw);
    return report;
}

BoolMatrix adjacency_blocks(const FSequence& seq, int n_levels)
{
    const CobwebPoset poset(seq, n_levels);
    const std::size_t v = poset.vertex_count();
    BoolMatrix a(v, v, 0);
    for (int s = 1; s < n_levels; ++s)
        for (std::size_t x = poset.level_begin(s); x <= poset.level_end(s); ++x)
            for (std::size_t y = poset.level_begin(s + 1); y <= poset.level_end(s + 1); ++y)
                a(x - 1, y - 1) = 1;
    return a;
}

BoolMatrix zeta_blocks(const FSequence& seq, int n_levels)
{
    const BoolMatrix a = adjacency_blocks(seq, n_levels);
    BoolMatrix zeta = BoolMatrix::identity(a.rows());
    BoolMatrix power = a;
    while (!is_zero(power)) {
        zeta = boolean_or(zeta, power);
        power = boolean_product(power, a);
    }
    return zeta;
}

namespace {

void check_point(const FSequence& seq, GridPoint p)
{
    if (p.level < 1 || p.position < 1 || Integer(p.position) > seq.term(p.level))
        throw InvalidParameter("invalid grid point <" + std::to_string(p.position) + "," +
                               std::to_string(p.level) + ">");
}

int delta(long a, long b) { return a == b ? 1 : 0; }

} // namespace

int zeta_krot_grid(const FSequence& seq, GridPoint x, GridPoint y)
{
    check_point(seq, x);
    check_point(seq, y);
    int value = delta(x.position, y.position) * delta(x.level, y.level);
    for (int k = 1; x.level + k <= y.level; ++k) value += delta(x.level + k, y.level);
    return value;
}

BoolMatrix zeta_krot_grid_matrix(const CobwebPoset& poset)
{
    const std::size_t v = poset.vertex_count();
    BoolMatrix zeta(v, v, 0);
    for (std::size_t x = 1; x <= v; ++x)
        for (std::size_t y = 1; y <= v; ++y)
            zeta(x - 1, y - 1) = static_cast<std::uint8_t>(
                zeta_krot_grid(poset.sequence(), poset.coords_of(x), poset.coords_of(y)));
    return zeta;
}

IntMatrix mobius_from_zeta(const BoolMatrix& zeta)
{
    const std::size_t v = zeta.rows();
    if (zeta.cols() != v) throw NotUnitriangular("zeta matrix is not square");
    for (std::size_t i = 0; i < v; ++i) {
        if (zeta(i, i) != 1) throw NotUnitriangular("zeta diagonal is not all ones");
        for (std::size_t j = 0; j < i; ++j)
            if (zeta(i, j) != 0) throw NotUnitriangular("zeta has entries below the diagonal");
    }

    // mu * zeta = I, solved one row at a time.
    IntMatrix mu(v, v, Integer(0));
    for (std::size_t x = 0; x < v; ++x) {
        mu(x, x) = 1;
        for (std::size_t y = x + 1; y < v; ++y) {
            Integer acc = 0;
            for (std::size_t z = x; z < y; ++z)
                if (zeta(z, y)) acc += mu(x, z);
            mu(x, y) = -acc;
        }
    }
    return mu;
}

std::optional<KrotParse> parse_krot(std::string_view name)
{
    if (name == "each-minus-one") return KrotParse::each_minus_one;
    if (name == "product-minus-one") return KrotParse::product_minus_one;
    if (name == "rewritten") return KrotParse::rewritten;
    return std::nullopt;
}

std::string to_string(KrotParse parse)
{
    switch (parse) {
    case KrotParse::each_minus_one:
        return "each-minus-one";
    case KrotParse::product_minus_one:
        return "product-minus-one";
    case KrotParse::rewritten:
        return "rewritten";
    }
    return {};
}

Integer mobius_krot(const FSequence& seq, GridPoint x, GridPoint y, KrotParse parse)
{
    check_point(seq, x);
    check_point(seq, y);
    const int t = x.level;
    const int v = y.level;

    Integer value = delta(x.position, y.position) * delta(t, v);
    if (parse != KrotParse::rewritten) value -= delta(t + 1, v);

    const int k_first = parse == KrotParse::rewritten ? 1 : 2;
    for (int k = k_first; t + k <= v; ++k) {
        if (!delta(t + k, v)) continue;
        Integer product = 1;
        for (int i = t + 1; i <= v - 1; ++i) {
            switch (parse) {
            case KrotParse::each_minus_one:
                product *= seq.term(i) - 1;
                break;
            case KrotParse::product_minus_one:
            case KrotParse::rewritten:
                product *= parse == KrotParse::rewritten ? seq.term(i - 1) : seq.term(i);
                break;
            }
        }
        if (parse == KrotParse::product_minus_one) product -= 1;
        value += (k % 2 == 0 ? product : Integer(-product));
    }
    return value;
}

IntMatrix mobius_krot_matrix(const CobwebPoset& poset, KrotParse parse)
{
    const std::size_t v = poset.vertex_count();
    IntMatrix mu(v, v, Integer(0));
    for (std::size_t x = 1; x <= v; ++x)
        for (std::size_t y = 1; y <= v; ++y)
            mu(x - 1, y - 1) =
                mobius_krot(poset.sequence(), poset.coords_of(x), poset.coords_of(y), parse);
    return mu;
}

std::optional<RenderStyle> parse_render_style(std::string_view name)
{
    if (name == "ascii") return RenderStyle::ascii;
    if (name == "pgm") return RenderStyle::pgm;
    if (name == "csv") return RenderStyle::csv;
    return std::nullopt;
}

std::string render_la_scala(const BoolMatrix& zeta, RenderStyle style)
{
    const std::size_t rows = zeta.rows();
    const std::size_t cols = zeta.cols();
    std::string out;
    switch (style) {
    case RenderStyle::ascii:
        for (std::size_t i = 0; i < rows; ++i) {
            std::string line;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j) line += ' ';
                const bool one = zeta(i, j) != 0;
                if (j < i)
                    line += one ? '-' : ' ';
                else if (j == i)
                    line += one ? '1' : '0';
                else
                    line += one ? '-' : '0';
            }
            line.erase(line.find_last_not_of(' ') + 1);
            out += line;
            out += '\n';
        }
        break;
    case RenderStyle::pgm:
        out = "P1\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n";
        [[fallthrough]];
    case RenderStyle::csv: {
        const char sep = style == RenderStyle::csv ? ',' : ' ';
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                if (j) out += sep;
                out += zeta(i, j) ? '1' : '0';
            }
            out += '\n';
        }
        break;
    }
    }
    return out;
}

std::string to_csv(const RawMatrix& m)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << '\n';
    }
    return os.str();
}

std::string to_csv(const IntMatrix& m)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
        os << '\n';
    }
    return os.str();
}

} // namespace cobweb
