#include "superschur/fractions.hpp"

#include <doctest.h>

using namespace superschur;

namespace {

const SuperSpace kUnit{1, 0};

MatMorphism row_vector(std::initializer_list<int> entries) {
    MatMorphism f = MatMorphism::zero(SuperSpace{static_cast<int>(entries.size()), 0}, kUnit);
    int j = 0;
    for (int v : entries) f.mat[0][static_cast<size_t>(j++)] = v;
    return f;
}

} // namespace

TEST_CASE("regularity is nonzeroness") {
    CHECK_FALSE(is_regular(MatMorphism::zero(SuperSpace{2, 0}, SuperSpace{2, 0})));
    CHECK(is_regular(MatMorphism::identity(SuperSpace{1, 1})));
    CHECK(is_regular(row_vector({1, 0})));
}

TEST_CASE("membership in C_f") {
    SuperSpace c{1, 0};
    // h = f (x) j is always a member.
    MatMorphism f = row_vector({2, 3});
    MatMorphism j = MatMorphism::scalar(Rational(5, 7));
    CHECK(in_cf(tensor(f, j), f, c, c));

    // f = [1 0], h = [a b]: member iff b = 0.
    CHECK(in_cf(row_vector({4, 0}), row_vector({1, 0}), c, c));
    CHECK_FALSE(in_cf(row_vector({4, 1}), row_vector({1, 0}), c, c));

    // f the identity of the unit: every h qualifies.
    MatMorphism any = MatMorphism::scalar(Rational(9));
    CHECK(in_cf(any, MatMorphism::identity(kUnit), c, c));
}

TEST_CASE("solver on scalar and vector instances") {
    SuperSpace c{1, 0};
    FracSolveResult r = frac_solve(MatMorphism::scalar(Rational(3)),
                                   MatMorphism::scalar(Rational(2)), c, c);
    REQUIRE(r.status == FracStatus::ok);
    CHECK(r.solution->mat[0][0] == Rational(3, 2));

    FracSolveResult v = frac_solve(row_vector({5, 0}), row_vector({1, 0}), c, c);
    REQUIRE(v.status == FracStatus::ok);
    CHECK(v.solution->mat[0][0] == 5);

    FracSolveResult zero = frac_solve(MatMorphism::zero(SuperSpace{2, 0}, kUnit),
                                      row_vector({1, 0}), c, c);
    REQUIRE(zero.status == FracStatus::ok);
    CHECK(zero.solution->is_zero());

    CHECK(frac_solve(row_vector({1, 0}), MatMorphism::zero(SuperSpace{2, 0}, kUnit), c, c).status ==
          FracStatus::not_regular);
    CHECK(frac_solve(row_vector({4, 1}), row_vector({1, 0}), c, c).status == FracStatus::not_in_cf);
    CHECK(frac_solve(MatMorphism::scalar(1), MatMorphism::identity(SuperSpace{2, 0}), c, c).status ==
          FracStatus::shape_mismatch);
}

TEST_CASE("solver handles odd factors through the Koszul symmetry") {
    SuperSpace a{1, 0};
    SuperSpace c{0, 1}, c_prime{0, 1};
    MatMorphism f = MatMorphism::scalar(Rational(2)); // A = unit here
    MatMorphism l = MatMorphism::zero(c, c_prime);
    l.mat[0][0] = Rational(7, 3);
    MatMorphism h = tensor(f, l);
    FracSolveResult r = frac_solve(h, f, c, c_prime);
    REQUIRE(r.status == FracStatus::ok);
    CHECK(*r.solution == l);
    (void)a;
}

TEST_CASE("pair equivalence") {
    SuperSpace c{1, 0};
    MatMorphism f = row_vector({1, 2});
    MatMorphism j = MatMorphism::scalar(Rational(3, 4));
    MatMorphism h = tensor(f, j);
    CHECK(pairs_equivalent(h, f, h, f, c, c));

    // Scalar fractions compare by cross-multiplication.
    CHECK(pairs_equivalent(MatMorphism::scalar(3), MatMorphism::scalar(2),
                           MatMorphism::scalar(6), MatMorphism::scalar(4), c, c));
    CHECK_FALSE(pairs_equivalent(MatMorphism::scalar(3), MatMorphism::scalar(2),
                                 MatMorphism::scalar(5), MatMorphism::scalar(2), c, c));

    // (h1,f) ~ (h2,f) iff h1 == h2.
    CHECK_FALSE(pairs_equivalent(MatMorphism::scalar(3), MatMorphism::scalar(2),
                                 MatMorphism::scalar(4), MatMorphism::scalar(2), c, c));

    // (h,f) ~ (g (x) h, g (x) f) by naturality.
    MatMorphism g = MatMorphism::identity(SuperSpace{1, 1});
    CHECK(pairs_equivalent(h, f, tensor(g, h), tensor(g, f), c, c));
}

TEST_CASE("fraction arithmetic over the unit") {
    Fraction x = Fraction::of(3, 2);
    Fraction y = Fraction::of(5, 2);
    Fraction sum = frac_add(x, y);
    CHECK(sum.h.mat[0][0] == 16);
    CHECK(sum.f.mat[0][0] == 4);
    CHECK(frac_equivalent(sum, Fraction::of(4, 1)));

    CHECK(frac_equivalent(frac_add(x, Fraction::of(0, 1)), x));
    CHECK(kappa_scalar(frac_mul(Fraction::of(3, 2), Fraction::of(4, 3))) == 2);

    // h/f times f/h is the identity fraction.
    MatMorphism f = MatMorphism::identity(SuperSpace{2, 0});
    MatMorphism h = f * Rational(5, 3);
    Fraction q = Fraction::make(h, f);
    Fraction inverse = Fraction::make(f, h);
    CHECK(frac_equivalent(frac_mul(q, inverse), Fraction::of(1, 1)));
}

TEST_CASE("kappa extracts the unique scalar") {
    CHECK(kappa_scalar(Fraction::of(3, 2)) == Rational(3, 2));
    MatMorphism f = row_vector({1, 0});
    // Fractions over the unit need parallel h and f; use endomorphisms.
    MatMorphism e = MatMorphism::identity(SuperSpace{2, 0});
    Fraction x = Fraction::make(e * Rational(7, 5), e);
    CHECK(kappa_scalar(x) == Rational(7, 5));
    CHECK_THROWS_AS(Fraction::make(f, MatMorphism::zero(SuperSpace{2, 0}, kUnit)),
                    std::invalid_argument);
}
