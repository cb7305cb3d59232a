#pragma once

#include "superschur/perm.hpp"
#include "superschur/trace_polynomial.hpp"

#include <map>
#include <set>

namespace superschur {

/// Exact-rational linear combination of permutations of a fixed degree d.
/// Canonical form: no explicit zero coefficients; equality is term-wise.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int degree);

    static GroupAlgebraElement zero(int degree) { return GroupAlgebraElement(degree); }
    static GroupAlgebraElement identity(int degree);
    static GroupAlgebraElement of(const Perm& sigma, const Rational& coeff = Rational(1));

    int degree() const { return degree_; }
    const std::map<Perm, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Rational coeff(const Perm& sigma) const;

    void add_term(const Perm& sigma, const Rational& coeff);

    GroupAlgebraElement operator+(const GroupAlgebraElement& other) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& other) const;
    GroupAlgebraElement operator*(const Rational& scalar) const;
    /// Convolution product: (x*y) applies y first, then x, matching operator
    /// composition under evaluation.
    GroupAlgebraElement operator*(const GroupAlgebraElement& other) const;
    bool operator==(const GroupAlgebraElement& other) const = default;

    /// Image under k[S_d] -> k[S_{d+1}]: each permutation fixes the new point.
    GroupAlgebraElement embed() const;

    /// Partial-trace contraction k[S_{d+1}] -> k[S_d] at loop parameter t:
    /// a permutation fixing the top point restricts with factor t; otherwise
    /// the top point is spliced out. Linear in the element.
    GroupAlgebraElement contract(const Rational& t) const;

    /// Sum of coeff(sigma) * t^(cycle count of sigma).
    TracePolynomial trace_poly() const;

private:
    int degree_ = 0;
    std::map<Perm, Rational> terms_;
};

GroupAlgebraElement multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

/// Young symmetrizer c_lambda = a_lambda * b_lambda for the canonical
/// tableau (rows filled left to right, top to bottom with 1..d).
GroupAlgebraElement young_symmetrizer(const Partition& lambda);

/// d! / f^lambda, the scalar with c_lambda^2 = (d!/f^lambda) c_lambda.
Rational quasi_idempotent_scalar(const Partition& lambda);

/// The primitive idempotent e_lambda = (f^lambda/d!) c_lambda.
GroupAlgebraElement young_idempotent(const Partition& lambda);

/// Partitions lambda |- d whose matrix block of x is nonzero, decided by the
/// character pairing: the block vanishes iff sum_tau coeff(tau) chi(tau sigma)
/// is zero for every sigma in S_d.
std::set<Partition> isotypic_support(const GroupAlgebraElement& x);

} // namespace superschur
