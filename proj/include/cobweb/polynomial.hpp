#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cobweb/numeric.hpp"

namespace cobweb {

/**
 * Dense univariate polynomial over exact rationals, lowest degree first.
 *
 * The coefficient vector is kept trimmed: no trailing zeros, so the zero
 * polynomial has an empty vector and degree -1.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(int degree, const Rational& c = 1);
    /// x - root
    static Polynomial linear_factor(const Rational& root);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const;

    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    Rational evaluate(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    bool operator==(const Polynomial& other) const = default;

    /// Human-readable form, highest degree first, e.g. "x^2 - 3x + 2".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

} // namespace cobweb
