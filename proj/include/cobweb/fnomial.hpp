#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/numeric.hpp"
#include "cobweb/polynomial.hpp"
#include "cobweb/seq.hpp"

namespace cobweb {

/// n_F! = 1_F * 2_F * ... * n_F, with 0_F! = 1.
Integer f_factorial(const FSequence& seq, int n);

/// n_F (n-1)_F ... (n-k+1)_F. Throws DomainError unless 0 <= k <= n.
Integer f_falling(const FSequence& seq, int n, int k);

/**
 * F-nomial coefficient n_F^(k falling) / k_F!.
 *
 * Returns 0 for k < 0 or k > n. Throws InadmissibleSequence when the
 * quotient is not an integer.
 */
Integer fnomial(const FSequence& seq, int n, int k);

/// Recurrences that can rebuild an F-nomial triangle without division.
enum class RecurrenceForm {
    /// (n+1,k) = F_{k-1} (n,k) + F_{n-k+2} (n,k-1); Fibonacci only.
    fibonacci_a,
    /// (n+1,k) = F_{k+1} (n,k) + F_{n-k} (n,k-1); Fibonacci only.
    fibonacci_b,
    /// (n+1,k) = q^k (n,k) + (n,k-1); Gaussian only.
    gaussian_q,
};

std::optional<RecurrenceForm> parse_recurrence_form(std::string_view name);
std::string to_string(RecurrenceForm form);

/// Triangle rows[n][k] = (n choose k)_F for 0 <= k <= n <= n_max.
class FNomialTable {
public:
    FNomialTable(FSequence seq, std::vector<std::vector<Integer>> rows);

    const FSequence& sequence() const noexcept { return seq_; }
    int n_max() const noexcept { return static_cast<int>(rows_.size()) - 1; }
    /// Zero outside 0 <= k <= n; throws IndexOutOfRange for n > n_max.
    Integer at(int n, int k) const;
    const std::vector<Integer>& row(int n) const;

    /// One line per n, entries comma-separated.
    std::string to_csv() const;

    bool operator==(const FNomialTable& other) const { return rows_ == other.rows_; }

private:
    FSequence seq_;
    std::vector<std::vector<Integer>> rows_;
};

/// Triangle from the falling-factorial quotient.
FNomialTable fnomial_table(const FSequence& seq, int n_max);

/// Triangle from a recurrence alone, with (n,0) = 1 and (0,k) = 0 for k > 0.
/// Throws FormMismatch when the form does not belong to the sequence.
FNomialTable fnomial_recurrence(const FSequence& seq, int n_max, RecurrenceForm form);

/// C_n = sum_k (n choose k)_F = (1 +_F 1)^n.
Integer ccc_rowsum(const FSequence& seq, int n);

/// (x +_F a)^n = sum_k (n choose k)_F a^k x^(n-k).
Polynomial f_shift_power(const FSequence& seq, const Rational& a, int n);

/// x^n -> n_F x^(n-1), extended linearly.
Polynomial f_derivative(const FSequence& seq, const Polynomial& p);

struct AdmissibilityResult {
    bool admissible = true;
    /// Smallest (n, k) in row-major order whose F-nomial is not an integer.
    std::optional<std::pair<int, int>> first_failure;
};

AdmissibilityResult is_admissible(const FSequence& seq, int n_max);

} // namespace cobweb
