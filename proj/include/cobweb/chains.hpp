#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cobweb/numeric.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

/// Union of levels first..last of a poset, 1 <= first <= last <= n_levels.
class Layer {
public:
    Layer(const CobwebPoset& poset, int first, int last);

    const CobwebPoset& poset() const noexcept { return *poset_; }
    int first() const noexcept { return first_; }
    int last() const noexcept { return last_; }

    /// Product of the level sizes, saturating at UINT64_MAX.
    std::uint64_t chain_bound() const;

private:
    const CobwebPoset* poset_;
    int first_;
    int last_;
};

/// One label per level, listed from the lowest level up.
using Chain = std::vector<std::size_t>;

inline constexpr std::uint64_t default_chain_cap = 1'000'000;

/// Every maximal chain of the layer; throws CapExceeded past `cap`.
std::vector<Chain> enumerate_max_chains(const Layer& layer,
                                        std::uint64_t cap = default_chain_cap);

/**
 * Counts maximal chains by walking cover relations of the definitional
 * zeta matrix, without storing them. Throws CapExceeded when the layer's
 * chain bound is above `cap`.
 */
std::uint64_t count_max_chains_enumerated(const Layer& layer,
                                          std::uint64_t cap = default_chain_cap);

/// Same walk, restricted to chains that start at `start_label`.
std::uint64_t count_max_chains_from(const Layer& layer, std::size_t start_label,
                                    std::uint64_t cap = default_chain_cap);

/// n_F! / (k-1)_F! for the layer from level k to level n.
Integer count_max_chains_closed(const FSequence& seq, int k, int n);

/// n_F^(m falling) with m = n - k: chains from one fixed vertex on level k.
Integer count_max_chains_from_vertex_closed(const FSequence& seq, int k, int n);

struct PartitionReport {
    int n = 0;
    int k = 0;
    Integer fnomial;
    Integer block_size;  // m_F!, m = n - k
    Integer layer_count; // enumerated chains of levels k+1..n
    bool holds = false;
};

/**
 * Checks |C_max<Phi_{k+1} -> Phi_n>| = (n choose k)_F * m_F!.
 *
 * The left side is counted by enumeration. For k = n the layer is empty
 * and holds exactly one (empty) chain.
 */
PartitionReport verify_partition_theorem(const FSequence& seq, int n, int k,
                                         std::uint64_t cap = default_chain_cap);

} // namespace cobweb
