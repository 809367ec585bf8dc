#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cobweb/numeric.hpp"
#include "cobweb/polynomial.hpp"
#include "cobweb/seq.hpp"

namespace cobweb {

/**
 * Finite prefix r_1, r_2, ... of a root sequence.
 *
 * A persistent-root polynomial sequence q_n(x) = q_{n-1}(x) (x - r_n) is
 * fully determined by its roots, so a pair of root sequences labels a
 * connection-constants array.
 */
class RootSequence {
public:
    RootSequence() = default;
    RootSequence(std::vector<Rational> terms, std::string rule = "list");

    static RootSequence zeros(int length);
    static RootSequence constant(const Rational& value, int length);
    /// r_k = q^(k-1): the roots of the q-Gaussian polynomials.
    static RootSequence geometric(const Rational& q, int length);
    /// r_1 = 0, r_2 = 2, r_k = 1 - r_{k-1}^2.
    static RootSequence lucas(int length);

    int length() const noexcept { return static_cast<int>(terms_.size()); }
    /// r_k for k >= 1; throws InsufficientPrefix past the prefix.
    const Rational& at(int k) const;
    const std::vector<Rational>& terms() const noexcept { return terms_; }
    const std::string& rule() const noexcept { return rule_; }

private:
    std::vector<Rational> terms_;
    std::string rule_ = "list";
};

/// q_n(x) = (x - r_1)...(x - r_n); q_0 = 1.
Polynomial persistent_poly(const RootSequence& roots, int n);
/// q_0 .. q_{n_max}
std::vector<Polynomial> persistent_basis(const RootSequence& roots, int n_max);

/// Lower-triangular exact array c_{n,k}, 0 <= k <= n <= n_max.
class ConnectionTable {
public:
    explicit ConnectionTable(std::vector<std::vector<Rational>> rows);

    int n_max() const noexcept { return static_cast<int>(rows_.size()) - 1; }
    /// Zero above the diagonal and for negative k; throws past n_max.
    Rational at(int n, int k) const;
    const std::vector<Rational>& row(int n) const;
    const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }

    /// Rationals as "p/q" (or "p"), one row per line.
    std::string to_csv() const;

    bool operator==(const ConnectionTable& other) const = default;

private:
    std::vector<std::vector<Rational>> rows_;
};

/// Generalized Lah numbers by L_{n+1,k} = L_{n,k-1} + (r_{k+1} - s_{n+1}) L_{n,k}.
ConnectionTable lah_table(const RootSequence& r, const RootSequence& s, int n_max);

/// C_n = sum_k c_{n,k}
Rational ccc(const ConnectionTable& table, int n);

/// C_{n+1} = (1 - s_{n+1}) C_n + sum_k c_{n,k} r_{k+1}, where n = row_n.size() - 1.
Rational ccc_step(std::span<const Rational> row_n, const RootSequence& r, const RootSequence& s,
                  const Rational& c_n);

/**
 * Connection constants by back-substitution: the unique table with
 * p_n = sum_k c_{n,k} q_k. Both bases must satisfy deg = index and the
 * q-basis must be monic; throws InvalidBasis otherwise.
 */
ConnectionTable connection_oracle(std::span<const Polynomial> p_basis,
                                  std::span<const Polynomial> q_basis, int n_max);

/**
 * Inverts x^n = sum_k c_{n,k} B_k, returning B_0..B_{n_max}.
 *
 * Any non-zero diagonal is accepted; a zero diagonal entry throws
 * NotUnitriangular.
 */
std::vector<Polynomial> basis_from_connection(const ConnectionTable& table);

/// Table with c_{n,k} = (n choose k)_F.
ConnectionTable fnomial_connection(const FSequence& seq, int n_max);

Integer stirling2(int n, int k);
Integer stirling1_unsigned(int n, int k);
Integer bell(int n);

struct BellIdentity {
    Integer lhs; // sum_k binom(n,k) B_k
    Integer rhs; // B_n + sum_{k>=1} S2(n,k) k
    bool holds = false;
};

BellIdentity bell_identity(int n);
bool bell_identity_check(int n);

/**
 * Solves for roots [r] whose Lah table against [s] has row sums C_0..C_n.
 *
 * target[0] must be 1. Each r_{n+1} is forced because c_{n,n} = 1.
 */
RootSequence solve_root_sequence(std::span<const Rational> target, const RootSequence& s);

} // namespace cobweb
