#pragma once

#include "superschur/rational.hpp"
#include "superschur/super_space.hpp"

#include <optional>
#include <vector>

namespace superschur {

/// Even (parity-preserving) linear map between super vector spaces, stored
/// as a dense exact-rational matrix (target dimension x source dimension).
/// Plain ungraded maps are the purely even case.
struct MatMorphism {
    SuperSpace source;
    SuperSpace target;
    std::vector<std::vector<Rational>> mat;

    static MatMorphism zero(SuperSpace source, SuperSpace target);
    static MatMorphism identity(SuperSpace space);
    static MatMorphism scalar(const Rational& value); // endomorphism of the unit

    int rows() const { return target.dim(); }
    int cols() const { return source.dim(); }
    bool is_zero() const;
    bool is_even() const;

    MatMorphism compose(const MatMorphism& other) const;
    MatMorphism operator+(const MatMorphism& other) const;
    MatMorphism operator*(const Rational& scalar) const;
    bool operator==(const MatMorphism& other) const = default;
};

/// Graded tensor product of even morphisms; for even maps this is the plain
/// Kronecker product, with the left factor most significant.
MatMorphism tensor(const MatMorphism& f, const MatMorphism& g);

/// The Koszul symmetry A (x) (B (x) C) -> B (x) (A (x) C).
MatMorphism koszul_symmetry(SuperSpace a, SuperSpace b, SuperSpace c);

SuperSpace tensor_space(SuperSpace a, SuperSpace b);

/// In the integral category of super vector spaces a morphism is regular
/// exactly when it is nonzero.
bool is_regular(const MatMorphism& f);

/// Membership of h: A (x) C -> A' (x) C' in C_f(C, C') for f: A -> A':
/// the defining square with the Koszul symmetry commutes.
bool in_cf(const MatMorphism& h, const MatMorphism& f, SuperSpace c, SuperSpace c_prime);

/// Pair equivalence (h,f) ~ (l,g) for morphisms in C_f(C,C') and C_g(C,C').
bool pairs_equivalent(const MatMorphism& h, const MatMorphism& f, const MatMorphism& l,
                      const MatMorphism& g, SuperSpace c, SuperSpace c_prime);

enum class FracStatus { ok, not_regular, not_in_cf, shape_mismatch };

struct FracSolveResult {
    FracStatus status = FracStatus::ok;
    std::optional<MatMorphism> solution;
};

/// For regular f: A -> 1 and h in C_f(C, C'), the unique l: C -> C' with
/// f (x) l = h. Precondition violations are reported by status, never by a
/// bogus solution.
FracSolveResult frac_solve(const MatMorphism& h, const MatMorphism& f, SuperSpace c,
                           SuperSpace c_prime);

/// Fraction h/f over the unit object: f regular and f (x) h = h (x) f.
struct Fraction {
    MatMorphism h;
    MatMorphism f;

    /// Validates regularity and the commuting condition.
    static Fraction make(MatMorphism h, MatMorphism f);
    static Fraction of(const Rational& numerator, const Rational& denominator);
};

Fraction frac_add(const Fraction& x, const Fraction& y);
Fraction frac_mul(const Fraction& x, const Fraction& y);
bool frac_equivalent(const Fraction& x, const Fraction& y);

/// The scalar c with f (x) c = h; fraction arithmetic maps to scalar
/// arithmetic under this map.
Rational kappa_scalar(const Fraction& x);

} // namespace superschur
