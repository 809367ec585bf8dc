#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cobweb/numeric.hpp"

namespace cobweb {

enum class SequenceKind { naturals, fibonacci, gaussian, constant, custom };

/**
 * A natural-numbers-valued sequence F = <F_0, F_1, ...> written k_F = F_k.
 *
 * F is the single parameter behind every F-nomial, every cobweb poset and
 * every zeta/Moebius construction in this library. Values are immutable
 * once constructed.
 *
 * Terms with k >= 1 are always >= 1. The zero term F_0 is stored for
 * completeness but no level size or factorial factor ever reads it.
 */
class FSequence {
public:
    static FSequence naturals();
    static FSequence fibonacci();
    /// Gaussian integers k_q = 1 + q + ... + q^(k-1); q >= 2.
    static FSequence gaussian(unsigned long q);
    /// k_F = c for every k; c >= 1.
    static FSequence constant(unsigned long c);
    /// Finite prefix t_1, t_2, ...; every t_k >= 1.
    static FSequence custom(std::vector<Integer> terms, Integer zero_term = 1);

    SequenceKind kind() const noexcept { return kind_; }
    /// q for gaussian, c for constant, 0 otherwise.
    unsigned long parameter() const noexcept { return param_; }
    const Integer& zero_term() const noexcept { return zero_term_; }

    /// Largest index that can be queried, if the sequence is finite.
    std::optional<int> max_index() const;

    /// k_F. Throws IndexOutOfRange for k < 0 or past a custom prefix.
    Integer term(int k) const;

    /// k_F narrowed to a machine size (level sizes of a poset).
    std::size_t term_size(int k) const;

    /// Terms 0..n inclusive.
    std::vector<Integer> terms(int n) const;

    /// Round-trips through make_sequence.
    std::string descriptor() const;

    bool operator==(const FSequence& other) const = default;

private:
    FSequence(SequenceKind kind, unsigned long param, std::vector<Integer> custom,
              Integer zero_term);

    SequenceKind kind_;
    unsigned long param_;
    std::vector<Integer> custom_; // custom_[k-1] = k_F
    Integer zero_term_;
};

/// k_F
Integer f_term(const FSequence& seq, int k);

/// S(n) = 1_F + 2_F + ... + n_F, with S(0) = 0.
Integer cumulative_sum(const FSequence& seq, int n);

/**
 * Parses `naturals | fibonacci | gaussian:<q> | constant:<c> |
 * custom:<t1>,<t2>,...`. Case-sensitive; throws InvalidParameter.
 */
FSequence make_sequence(std::string_view descriptor);

} // namespace cobweb
