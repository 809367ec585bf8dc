#include "cobweb/connection.hpp"

#include <sstream>

#include "cobweb/errors.hpp"
#include "cobweb/fnomial.hpp"

namespace cobweb {

RootSequence::RootSequence(std::vector<Rational> terms, std::string rule)
    : terms_(std::move(terms)), rule_(std::move(rule))
{
    for (Rational& r : terms_) r.canonicalize();
}

RootSequence RootSequence::zeros(int length) { return constant(0, length); }

RootSequence RootSequence::constant(const Rational& value, int length)
{
    return {std::vector<Rational>(static_cast<std::size_t>(length), value),
            "constant:" + value.get_str()};
}

RootSequence RootSequence::geometric(const Rational& q, int length)
{
    std::vector<Rational> terms;
    Rational power = 1;
    for (int k = 1; k <= length; ++k) {
        terms.push_back(power);
        power *= q;
    }
    return {std::move(terms), "geometric:" + q.get_str()};
}

RootSequence RootSequence::lucas(int length)
{
    std::vector<Rational> terms;
    for (int k = 1; k <= length; ++k) {
        if (k == 1)
            terms.emplace_back(0);
        else if (k == 2)
            terms.emplace_back(2);
        else
            terms.push_back(1 - terms.back() * terms.back());
    }
    return {std::move(terms), "lucas"};
}

const Rational& RootSequence::at(int k) const
{
    if (k < 1 || k > length())
        throw InsufficientPrefix("root sequence (" + rule_ + ") has " + std::to_string(length()) +
                                 " terms, r_" + std::to_string(k) + " requested");
    return terms_[static_cast<std::size_t>(k) - 1];
}

Polynomial persistent_poly(const RootSequence& roots, int n)
{
    Polynomial out = Polynomial::constant(1);
    for (int k = 1; k <= n; ++k) out = out * Polynomial::linear_factor(roots.at(k));
    return out;
}

std::vector<Polynomial> persistent_basis(const RootSequence& roots, int n_max)
{
    std::vector<Polynomial> out{Polynomial::constant(1)};
    for (int k = 1; k <= n_max; ++k)
        out.push_back(out.back() * Polynomial::linear_factor(roots.at(k)));
    return out;
}

ConnectionTable::ConnectionTable(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows))
{
    for (std::size_t n = 0; n < rows_.size(); ++n)
        if (rows_[n].size() != n + 1)
            throw InvalidParameter("connection table row " + std::to_string(n) + " has " +
                                   std::to_string(rows_[n].size()) + " entries");
}

Rational ConnectionTable::at(int n, int k) const
{
    const auto& r = row(n);
    if (k < 0 || k > n) return 0;
    return r[static_cast<std::size_t>(k)];
}

const std::vector<Rational>& ConnectionTable::row(int n) const
{
    if (n < 0 || n > n_max())
        throw IndexOutOfRange("row " + std::to_string(n) + " not in connection table");
    return rows_[static_cast<std::size_t>(n)];
}

std::string ConnectionTable::to_csv() const
{
    std::ostringstream os;
    for (const auto& row : rows_) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k].get_str();
        os << '\n';
    }
    return os.str();
}

ConnectionTable lah_table(const RootSequence& r, const RootSequence& s, int n_max)
{
    if (n_max < 0) throw DomainError("negative table size");
    std::vector<std::vector<Rational>> rows{{Rational(1)}};
    for (int n = 0; n < n_max; ++n) {
        const auto& prev = rows.back();
        const Rational& s_next = s.at(n + 1);
        std::vector<Rational> next(static_cast<std::size_t>(n) + 2, Rational(0));
        for (int k = 0; k <= n + 1; ++k) {
            Rational value = 0;
            if (k >= 1) value += prev[static_cast<std::size_t>(k) - 1];
            if (k <= n) value += (r.at(k + 1) - s_next) * prev[static_cast<std::size_t>(k)];
            next[static_cast<std::size_t>(k)] = value;
        }
        rows.push_back(std::move(next));
    }
    return ConnectionTable(std::move(rows));
}

Rational ccc(const ConnectionTable& table, int n)
{
    Rational sum = 0;
    for (const auto& c : table.row(n)) sum += c;
    return sum;
}

Rational ccc_step(std::span<const Rational> row_n, const RootSequence& r, const RootSequence& s,
                  const Rational& c_n)
{
    const int n = static_cast<int>(row_n.size()) - 1;
    Rational out = (1 - s.at(n + 1)) * c_n;
    for (int k = 0; k <= n; ++k) out += row_n[static_cast<std::size_t>(k)] * r.at(k + 1);
    return out;
}

ConnectionTable connection_oracle(std::span<const Polynomial> p_basis,
                                  std::span<const Polynomial> q_basis, int n_max)
{
    if (n_max < 0) throw DomainError("negative table size");
    if (static_cast<int>(p_basis.size()) <= n_max || static_cast<int>(q_basis.size()) <= n_max)
        throw InvalidBasis("basis shorter than requested table size");
    for (int k = 0; k <= n_max; ++k) {
        if (p_basis[k].degree() != k)
            throw InvalidBasis("p-basis element " + std::to_string(k) + " has degree " +
                               std::to_string(p_basis[k].degree()));
        if (q_basis[k].degree() != k || !q_basis[k].is_monic())
            throw InvalidBasis("q-basis element " + std::to_string(k) + " is not monic of degree " +
                               std::to_string(k));
    }

    std::vector<std::vector<Rational>> rows;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Rational> row(static_cast<std::size_t>(n) + 1, Rational(0));
        Polynomial residual = p_basis[n];
        for (int k = n; k >= 0; --k) {
            Rational c = residual.coeff(k);
            row[static_cast<std::size_t>(k)] = c;
            if (c != 0) residual -= c * q_basis[k];
        }
        if (!residual.is_zero()) throw InvalidBasis("back-substitution left a non-zero residual");
        rows.push_back(std::move(row));
    }
    return ConnectionTable(std::move(rows));
}

std::vector<Polynomial> basis_from_connection(const ConnectionTable& table)
{
    // x^n = c_{n,n} B_n + sum_{k<n} c_{n,k} B_k, solved for B_n row by row.
    std::vector<Polynomial> basis;
    for (int n = 0; n <= table.n_max(); ++n) {
        const Rational diag = table.at(n, n);
        if (diag == 0)
            throw NotUnitriangular("zero diagonal entry at row " + std::to_string(n) +
                                   ", table is singular");
        Polynomial b = Polynomial::monomial(n);
        for (int k = 0; k < n; ++k) {
            const Rational c = table.at(n, k);
            if (c != 0) b -= c * basis[static_cast<std::size_t>(k)];
        }
        b *= Rational(1) / diag;
        basis.push_back(std::move(b));
    }
    return basis;
}

ConnectionTable fnomial_connection(const FSequence& seq, int n_max)
{
    const FNomialTable t = fnomial_table(seq, n_max);
    std::vector<std::vector<Rational>> rows;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Rational> row;
        for (const auto& v : t.row(n)) row.emplace_back(v);
        rows.push_back(std::move(row));
    }
    return ConnectionTable(std::move(rows));
}

namespace {

void check_stirling_domain(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw DomainError("Stirling numbers need 0 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
}

// rows[n][k] by {n,k} = k {n-1,k} + {n-1,k-1}, or, for the first kind,
// [n,k] = (n-1) [n-1,k] + [n-1,k-1].
std::vector<std::vector<Integer>> stirling_rows(int n_max, bool first_kind)
{
    std::vector<std::vector<Integer>> rows{{Integer(1)}};
    for (int n = 1; n <= n_max; ++n) {
        const auto& prev = rows.back();
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1, Integer(0));
        for (int k = 1; k <= n; ++k) {
            Integer stay = k < n ? prev[static_cast<std::size_t>(k)] : Integer(0);
            Integer weight = first_kind ? Integer(n - 1) : Integer(k);
            row[static_cast<std::size_t>(k)] = weight * stay + prev[static_cast<std::size_t>(k) - 1];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

Integer stirling2(int n, int k)
{
    check_stirling_domain(n, k);
    return stirling_rows(n, false)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer stirling1_unsigned(int n, int k)
{
    check_stirling_domain(n, k);
    return stirling_rows(n, true)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer bell(int n)
{
    if (n < 0) throw DomainError("Bell number of negative index");
    const auto rows = stirling_rows(n, false);
    Integer sum = 0;
    for (const auto& v : rows[static_cast<std::size_t>(n)]) sum += v;
    return sum;
}

BellIdentity bell_identity(int n)
{
    if (n < 0) throw DomainError("Bell identity needs n >= 0");
    BellIdentity out;
    const FSequence naturals = FSequence::naturals();
    const auto s2 = stirling_rows(n, false).at(static_cast<std::size_t>(n));
    out.lhs = 0;
    for (int k = 0; k <= n; ++k) out.lhs += fnomial(naturals, n, k) * bell(k);
    out.rhs = bell(n);
    for (int k = 1; k <= n; ++k) out.rhs += s2[static_cast<std::size_t>(k)] * k;
    out.holds = out.lhs == out.rhs;
    return out;
}

bool bell_identity_check(int n) { return bell_identity(n).holds; }

RootSequence solve_root_sequence(std::span<const Rational> target, const RootSequence& s)
{
    if (target.empty() || target[0] != 1)
        throw InvalidParameter("target ccc list must start with C_0 = 1");
    const int n_max = static_cast<int>(target.size()) - 1;

    std::vector<Rational> roots;
    std::vector<Rational> row{Rational(1)};
    for (int n = 0; n < n_max; ++n) {
        // C_{n+1} = (1 - s_{n+1}) C_n + sum_{k<n} c_{n,k} r_{k+1} + c_{n,n} r_{n+1}
        Rational known = (1 - s.at(n + 1)) * target[static_cast<std::size_t>(n)];
        for (int k = 0; k < n; ++k) known += row[static_cast<std::size_t>(k)] * roots[k];
        const Rational& lead = row[static_cast<std::size_t>(n)];
        if (lead == 0) throw DomainError("no root solves step " + std::to_string(n + 1));
        roots.push_back((target[static_cast<std::size_t>(n) + 1] - known) / lead);

        const RootSequence r(roots, "solved");
        const Rational& s_next = s.at(n + 1);
        std::vector<Rational> next(static_cast<std::size_t>(n) + 2, Rational(0));
        for (int k = 0; k <= n + 1; ++k) {
            if (k >= 1) next[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k) - 1];
            if (k <= n) next[static_cast<std::size_t>(k)] += (r.at(k + 1) - s_next) * row[k];
        }
        row = std::move(next);
    }
    return {std::move(roots), "solved"};
}

} // namespace cobweb
