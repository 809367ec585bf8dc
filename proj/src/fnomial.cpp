#include "cobweb/fnomial.hpp"

#include <sstream>

#include "cobweb/errors.hpp"

namespace cobweb {

namespace {

// Fibonacci extended to negative indices, F_{-n} = (-1)^{n+1} F_n. The
// second recurrence form reads F_{-1} on the diagonal k = n + 1.
Integer fibonacci_signed(int i)
{
    Integer out;
    mpz_fib_ui(out.get_mpz_t(), static_cast<unsigned long>(i < 0 ? -i : i));
    if (i < 0 && (-i) % 2 == 0) out = -out;
    return out;
}

bool form_matches(const FSequence& seq, RecurrenceForm form)
{
    switch (form) {
    case RecurrenceForm::fibonacci_a:
    case RecurrenceForm::fibonacci_b:
        return seq.kind() == SequenceKind::fibonacci;
    case RecurrenceForm::gaussian_q:
        return seq.kind() == SequenceKind::gaussian;
    }
    return false;
}

Integer quotient_or_throw(const Integer& num, const Integer& den, int n, int k)
{
    Integer out;
    if (!divides_exactly(num, den, out)) throw InadmissibleSequence(n, k);
    return out;
}

} // namespace

Integer f_factorial(const FSequence& seq, int n)
{
    if (n < 0) throw DomainError("F-factorial of negative index");
    Integer out = 1;
    for (int j = 1; j <= n; ++j) out *= seq.term(j);
    return out;
}

Integer f_falling(const FSequence& seq, int n, int k)
{
    if (k < 0 || k > n)
        throw DomainError("falling F-factorial needs 0 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    Integer out = 1;
    for (int j = n - k + 1; j <= n; ++j) out *= seq.term(j);
    return out;
}

Integer fnomial(const FSequence& seq, int n, int k)
{
    if (k < 0 || k > n) return 0;
    return quotient_or_throw(f_falling(seq, n, k), f_factorial(seq, k), n, k);
}

std::optional<RecurrenceForm> parse_recurrence_form(std::string_view name)
{
    if (name == "form-A") return RecurrenceForm::fibonacci_a;
    if (name == "form-B") return RecurrenceForm::fibonacci_b;
    if (name == "q-form") return RecurrenceForm::gaussian_q;
    return std::nullopt;
}

std::string to_string(RecurrenceForm form)
{
    switch (form) {
    case RecurrenceForm::fibonacci_a:
        return "form-A";
    case RecurrenceForm::fibonacci_b:
        return "form-B";
    case RecurrenceForm::gaussian_q:
        return "q-form";
    }
    return {};
}

FNomialTable::FNomialTable(FSequence seq, std::vector<std::vector<Integer>> rows)
    : seq_(std::move(seq)), rows_(std::move(rows))
{
}

Integer FNomialTable::at(int n, int k) const
{
    if (n < 0 || n > n_max()) throw IndexOutOfRange("row " + std::to_string(n) + " not in table");
    if (k < 0 || k > n) return 0;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const std::vector<Integer>& FNomialTable::row(int n) const
{
    if (n < 0 || n > n_max()) throw IndexOutOfRange("row " + std::to_string(n) + " not in table");
    return rows_[static_cast<std::size_t>(n)];
}

std::string FNomialTable::to_csv() const
{
    std::ostringstream os;
    for (const auto& row : rows_) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k].get_str();
        os << '\n';
    }
    return os.str();
}

FNomialTable fnomial_table(const FSequence& seq, int n_max)
{
    if (n_max < 0) throw DomainError("negative table size");
    const auto terms = seq.terms(n_max);
    // factorials[k] = k_F!
    std::vector<Integer> factorials(static_cast<std::size_t>(n_max) + 1, Integer(1));
    for (int k = 1; k <= n_max; ++k) factorials[k] = factorials[k - 1] * terms[k];

    std::vector<std::vector<Integer>> rows;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Integer> row;
        Integer falling = 1;
        for (int k = 0; k <= n; ++k) {
            if (k > 0) falling *= terms[n - k + 1];
            row.push_back(quotient_or_throw(falling, factorials[k], n, k));
        }
        rows.push_back(std::move(row));
    }
    return {seq, std::move(rows)};
}

FNomialTable fnomial_recurrence(const FSequence& seq, int n_max, RecurrenceForm form)
{
    if (!form_matches(seq, form))
        throw FormMismatch("recurrence " + to_string(form) + " does not apply to sequence " +
                           seq.descriptor());
    if (n_max < 0) throw DomainError("negative table size");

    auto prev_at = [](const std::vector<Integer>& row, int k) -> Integer {
        if (k < 0 || k >= static_cast<int>(row.size())) return 0;
        return row[static_cast<std::size_t>(k)];
    };

    std::vector<std::vector<Integer>> rows{{Integer(1)}};
    for (int n = 0; n < n_max; ++n) {
        const auto& prev = rows.back();
        std::vector<Integer> next{Integer(1)};
        for (int k = 1; k <= n + 1; ++k) {
            Integer value;
            switch (form) {
            case RecurrenceForm::fibonacci_a:
                value = fibonacci_signed(k - 1) * prev_at(prev, k) +
                        fibonacci_signed(n - k + 2) * prev_at(prev, k - 1);
                break;
            case RecurrenceForm::fibonacci_b:
                value = fibonacci_signed(k + 1) * prev_at(prev, k) +
                        fibonacci_signed(n - k) * prev_at(prev, k - 1);
                break;
            case RecurrenceForm::gaussian_q:
                value = pow(Integer(seq.parameter()), static_cast<unsigned long>(k)) *
                            prev_at(prev, k) +
                        prev_at(prev, k - 1);
                break;
            }
            next.push_back(std::move(value));
        }
        rows.push_back(std::move(next));
    }
    return {seq, std::move(rows)};
}

Integer ccc_rowsum(const FSequence& seq, int n)
{
    Integer sum = 0;
    for (int k = 0; k <= n; ++k) sum += fnomial(seq, n, k);
    return sum;
}

Polynomial f_shift_power(const FSequence& seq, const Rational& a, int n)
{
    if (n < 0) throw DomainError("negative power");
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    Rational a_pow = 1;
    for (int k = 0; k <= n; ++k) {
        coeffs[static_cast<std::size_t>(n - k)] = Rational(fnomial(seq, n, k)) * a_pow;
        a_pow *= a;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial f_derivative(const FSequence& seq, const Polynomial& p)
{
    if (p.degree() < 1) return {};
    std::vector<Rational> coeffs(static_cast<std::size_t>(p.degree()), Rational(0));
    for (int n = 1; n <= p.degree(); ++n)
        coeffs[static_cast<std::size_t>(n - 1)] = p.coeff(n) * Rational(seq.term(n));
    return Polynomial(std::move(coeffs));
}

AdmissibilityResult is_admissible(const FSequence& seq, int n_max)
{
    const auto terms = seq.terms(n_max);
    std::vector<Integer> factorials(static_cast<std::size_t>(n_max) + 1, Integer(1));
    for (int k = 1; k <= n_max; ++k) factorials[k] = factorials[k - 1] * terms[k];

    for (int n = 0; n <= n_max; ++n) {
        Integer falling = 1;
        for (int k = 0; k <= n; ++k) {
            if (k > 0) falling *= terms[n - k + 1];
            Integer q;
            if (!divides_exactly(falling, factorials[k], q)) return {false, std::pair{n, k}};
        }
    }
    return {};
}

} // namespace cobweb
