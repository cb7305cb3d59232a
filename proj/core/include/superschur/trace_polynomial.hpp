#pragma once

#include "superschur/rational.hpp"

#include <vector>

namespace superschur {

/// Univariate polynomial in t with exact rational coefficients. For a
/// group-algebra element of degree d the trace polynomial has degree <= d;
/// evaluating at an integer rank gives the trace on any dualisable object
/// of that rank.
class TracePolynomial {
public:
    TracePolynomial() = default;
    explicit TracePolynomial(std::vector<Rational> ascending_coeffs);

    static TracePolynomial monomial(int power, const Rational& coeff);

    int degree() const; // -1 for the zero polynomial
    const Rational& coeff(int power) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational evaluate(const Rational& t) const;

    TracePolynomial operator+(const TracePolynomial& other) const;
    TracePolynomial operator*(const TracePolynomial& other) const;
    TracePolynomial operator*(const Rational& scalar) const;
    bool operator==(const TracePolynomial& other) const = default;

    /// Human-readable form, descending powers: "t^2 + t", "1/12*t^4 - 1/12*t^2".
    std::string to_string() const;

private:
    std::vector<Rational> coeffs_; // ascending, no trailing zeros
    void trim();
};

} // namespace superschur
