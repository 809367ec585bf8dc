#include "cobweb/chains.hpp"

#include <limits>

#include "cobweb/errors.hpp"
#include "cobweb/fnomial.hpp"

namespace cobweb {

Layer::Layer(const CobwebPoset& poset, int first, int last) : poset_(&poset), first_(first), last_(last)
{
    if (first < 1 || first > last || last > poset.n_levels())
        throw DomainError("layer needs 1 <= first <= last <= " + std::to_string(poset.n_levels()) +
                          ", got " + std::to_string(first) + ".." + std::to_string(last));
}

std::uint64_t Layer::chain_bound() const
{
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t bound = 1;
    for (int s = first_; s <= last_; ++s) {
        const std::uint64_t size = poset_->level_size(s);
        if (size != 0 && bound > max / size) return max;
        bound *= size;
    }
    return bound;
}

namespace {

// Hasse diagram of the layer, read off the definitional zeta matrix:
// y covers x when x < y and nothing in the layer sits strictly between.
struct CoverGraph {
    std::size_t first_label = 0;
    std::vector<std::vector<std::size_t>> up; // up[x - first_label] = covers of x
    std::vector<bool> minimal;
};

CoverGraph build_covers(const Layer& layer)
{
    const CobwebPoset& poset = layer.poset();
    const BoolMatrix zeta = zeta_definitional(poset);
    const std::size_t lo = poset.level_begin(layer.first());
    const std::size_t hi = poset.level_end(layer.last());
    auto less = [&](std::size_t a, std::size_t b) { return a != b && zeta(a - 1, b - 1); };

    CoverGraph g;
    g.first_label = lo;
    g.up.resize(hi - lo + 1);
    g.minimal.assign(hi - lo + 1, true);
    for (std::size_t x = lo; x <= hi; ++x)
        for (std::size_t y = lo; y <= hi; ++y) {
            if (!less(x, y)) continue;
            g.minimal[y - lo] = false;
            bool between = false;
            // zeta is upper triangular in the canonical labelling
            for (std::size_t z = x + 1; z < y && !between; ++z) between = less(x, z) && less(z, y);
            if (!between) g.up[x - lo].push_back(y);
        }
    return g;
}

void check_cap(const Layer& layer, std::uint64_t cap)
{
    const std::uint64_t bound = layer.chain_bound();
    if (bound > cap)
        throw CapExceeded("layer " + std::to_string(layer.first()) + ".." +
                          std::to_string(layer.last()) + " has " + std::to_string(bound) +
                          " maximal chains, cap is " + std::to_string(cap));
}

// Depth-first walk; `visit` sees the path at every element with no cover above.
template <class Visit>
void walk(const CoverGraph& g, Chain& path, Visit& visit)
{
    const auto& up = g.up[path.back() - g.first_label];
    if (up.empty()) {
        visit(path);
        return;
    }
    for (std::size_t y : up) {
        path.push_back(y);
        walk(g, path, visit);
        path.pop_back();
    }
}

template <class Visit>
void walk_from(const CoverGraph& g, std::size_t start, Visit visit)
{
    Chain path{start};
    walk(g, path, visit);
}

} // namespace

std::vector<Chain> enumerate_max_chains(const Layer& layer, std::uint64_t cap)
{
    check_cap(layer, cap);
    const CoverGraph g = build_covers(layer);
    std::vector<Chain> chains;
    for (std::size_t i = 0; i < g.minimal.size(); ++i)
        if (g.minimal[i]) walk_from(g, g.first_label + i, [&](const Chain& c) { chains.push_back(c); });
    return chains;
}

std::uint64_t count_max_chains_enumerated(const Layer& layer, std::uint64_t cap)
{
    check_cap(layer, cap);
    const CoverGraph g = build_covers(layer);
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < g.minimal.size(); ++i)
        if (g.minimal[i]) walk_from(g, g.first_label + i, [&](const Chain&) { ++count; });
    return count;
}

std::uint64_t count_max_chains_from(const Layer& layer, std::size_t start_label, std::uint64_t cap)
{
    check_cap(layer, cap);
    const CoverGraph g = build_covers(layer);
    if (start_label < g.first_label || start_label - g.first_label >= g.up.size())
        throw IndexOutOfRange("label " + std::to_string(start_label) + " is not in the layer");
    std::uint64_t count = 0;
    walk_from(g, start_label, [&](const Chain&) { ++count; });
    return count;
}

Integer count_max_chains_closed(const FSequence& seq, int k, int n)
{
    if (k < 1 || k > n) throw DomainError("closed chain count needs 1 <= k <= n");
    Integer out;
    if (!divides_exactly(f_factorial(seq, n), f_factorial(seq, k - 1), out))
        throw DomainError("(k-1)_F! does not divide n_F!");
    return out;
}

Integer count_max_chains_from_vertex_closed(const FSequence& seq, int k, int n)
{
    if (k < 1 || k > n) throw DomainError("closed chain count needs 1 <= k <= n");
    return f_falling(seq, n, n - k);
}

PartitionReport verify_partition_theorem(const FSequence& seq, int n, int k, std::uint64_t cap)
{
    if (k < 0 || k > n) throw DomainError("partition theorem needs 0 <= k <= n");
    PartitionReport report;
    report.n = n;
    report.k = k;
    report.fnomial = fnomial(seq, n, k);
    report.block_size = f_factorial(seq, n - k);
    if (k == n) {
        report.layer_count = 1;
    } else {
        const CobwebPoset poset(seq, n);
        report.layer_count = count_max_chains_enumerated(Layer(poset, k + 1, n), cap);
    }
    report.holds = report.layer_count == report.fnomial * report.block_size;
    return report;
}

} // namespace cobweb
