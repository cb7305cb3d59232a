#include "superschur/schur_weyl.hpp"

#include "superschur/config.hpp"

#include <doctest.h>

using namespace superschur;

namespace {
Partition P(const std::string& wire) { return Partition::parse(wire); }
Partition square(int m0) { return Partition(std::vector<int>(static_cast<size_t>(m0), m0)); }
} // namespace

TEST_CASE("closed-form square trace polynomials") {
    CHECK(p_square_closed_form(1) == TracePolynomial::monomial(1, Rational(1)));
    TracePolynomial expected(std::vector<Rational>{Rational(0), Rational(0), Rational(-1, 12),
                                                   Rational(0), Rational(1, 12)});
    CHECK(p_square_closed_form(2) == expected);
    for (int m0 = 1; m0 <= 2; ++m0)
        CHECK(p_square_closed_form(m0) == young_idempotent(square(m0)).trace_poly());
}

TEST_CASE("weyl products") {
    CHECK(tau_weyl(P("2,2"), 4) == 20);
    CHECK(tau_weyl(P("3"), 1) == 1);
    CHECK(tau_weyl(P("2,1"), 2) == 2);
}

TEST_CASE("rho product form of tau") {
    CHECK(tau_rho_product(2, 4) == 20);
    CHECK(tau_rho_product(1, 2) == 2);
    CHECK(tau_rho_product(1, 3) == 3);
    CHECK_THROWS_AS(tau_rho_product(2, 3), std::invalid_argument);
    for (int m0 = 1; m0 <= 2; ++m0)
        for (int m = 2 * m0; m <= 8; ++m)
            CHECK(tau_rho_product(m0, m) == tau_weyl(square(m0), m));
}

TEST_CASE("p_square agrees with the Weyl product at integer points") {
    // The closed product is asserted from 2*m0 up; below 3*m0 this probes
    // the source's stated validity boundary.
    for (int m0 = 1; m0 <= 2; ++m0)
        for (int m = 2 * m0; m <= 8; ++m)
            CHECK(p_square_closed_form(m0).evaluate(Rational(m)) == tau_weyl(square(m0), m));
}

TEST_CASE("schur dimension pairs") {
    CHECK(schur_dim(P("2,2"), SuperSpace{1, 1}) == DimPair{0, 0});
    CHECK(schur_dim(P("2"), SuperSpace{1, 0}) == DimPair{1, 0});
    CHECK(schur_dim(P("1,1"), SuperSpace{1, 0}) == DimPair{0, 0});
    CHECK(schur_dim(P("2"), SuperSpace{1, 1}) == DimPair{1, 1});
    CHECK(schur_dim(P("1"), SuperSpace{2, 1}) == DimPair{2, 1});
}

TEST_CASE("vanishing criterion") {
    CHECK(schur_vanishes(P("2,2"), SuperSpace{1, 1}));
    CHECK_FALSE(schur_vanishes(P("5"), SuperSpace{1, 0}));
    CHECK(schur_vanishes(P("1,1"), SuperSpace{1, 0}));
    for (int d = 1; d <= 5; ++d)
        for (const Partition& lambda : partitions_of(d))
            for (SuperSpace space :
                 {SuperSpace{1, 0}, SuperSpace{0, 1}, SuperSpace{1, 1}, SuperSpace{2, 0}, SuperSpace{2, 1}}) {
                DimPair dims = schur_dim(lambda, space);
                CHECK(schur_vanishes(lambda, space) == (dims == DimPair{0, 0}));
            }
}

TEST_CASE("contraction entries: closed form equals the direct matrix entry") {
    // n = 0 branch at the smallest nonvanishing m.
    CHECK(contraction_entry(P("2"), 1, 2, 0) == 1);
    CHECK(contraction_entry(P("2"), 2, 2, 0) == 1);
    CHECK(contraction_entry_direct(P("2"), 1, 2, 0) == 1);
    // Zero factor cases.
    CHECK(contraction_entry(P("2,2"), 1, 1, 1) == 0);
    CHECK(contraction_entry_direct(P("2,2"), 1, 1, 1) == 0);
    // (2,1) on 1|1: the l = 2 entry is the nonzero witness.
    CHECK(contraction_entry(P("2,1"), 1, 1, 1) == 0);
    CHECK(contraction_entry(P("2,1"), 2, 1, 1) != 0);
    CHECK(contraction_entry_direct(P("2,1"), 2, 1, 1) ==
          contraction_entry(P("2,1"), 2, 1, 1));
    CHECK_THROWS_AS(contraction_entry(P("2"), 3, 2, 0), std::invalid_argument);

    for (int d = 1; d <= 5; ++d)
        for (const Partition& lambda : partitions_of(d))
            for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 0}, {4, 0}}) {
                for (int l = 1; l <= lambda.part(0); ++l)
                    CHECK(contraction_entry(lambda, l, m, n) ==
                          contraction_entry_direct(lambda, l, m, n));
            }
}

TEST_CASE("contraction entry equals the partial supertrace diagonal") {
    // Third route: trace out the factor of box (1,l) and read the diagonal
    // entry at the remaining assignment, independent of the summed form.
    for (int d = 2; d <= 4; ++d)
        for (const Partition& lambda : partitions_of(d))
            for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 0}}) {
                if (lambda.part(n) > m) continue;
                Partition lt = lambda.transpose();
                SuperSpace space{m, n};
                SuperOperator op = evaluate(young_symmetrizer(lt), space);
                // Column-major strand of box (i,j), and the assignment.
                auto strand = [&](int i, int j) {
                    int s = 0;
                    for (int col = 1; col < j; ++col) s += lt.part(col - 1);
                    return s + (i - 1);
                };
                int n0 = std::min(n, lambda.rows());
                for (int l = 1; l <= lambda.part(0); ++l) {
                    std::vector<int> kept;
                    std::vector<std::pair<int, int>> boxes;
                    for (int i = 1; i <= lambda.rows(); ++i)
                        for (int j = 1; j <= lambda.part(i - 1); ++j) boxes.emplace_back(i, j);
                    std::sort(boxes.begin(), boxes.end(), [&](auto a, auto b) {
                        return strand(a.first, a.second) < strand(b.first, b.second);
                    });
                    for (auto [i, j] : boxes) {
                        if (i == 1 && j == l) continue;
                        kept.push_back(i <= n0 ? m + i - 1 : j - 1);
                    }
                    SuperOperator traced = op.partial_supertrace(strand(1, l) + 1);
                    long long index = traced.indexer().index(kept);
                    CHECK(traced.entry(index, index) ==
                          contraction_entry_direct(lambda, l, m, n));
                }
            }
}

TEST_CASE("rectangle criterion records") {
    RectangleCriterion zero_case = rectangle_criterion(P("2,2"), SuperSpace{1, 1});
    CHECK_FALSE(zero_case.f_nonzero);
    CHECK(zero_case.all_contractions_zero);

    RectangleCriterion sym_case = rectangle_criterion(P("2"), SuperSpace{2, 0});
    CHECK(sym_case.f_nonzero);
    CHECK_FALSE(sym_case.all_contractions_zero);

    // (1,1) on 2|1: rectangle with rows - cols = 1 = m - n and nonvanishing.
    RectangleCriterion flagged = rectangle_criterion(P("1,1"), SuperSpace{2, 1});
    CHECK(flagged.f_nonzero);
    CHECK(flagged.all_contractions_zero);
}

TEST_CASE("rectangle scan biconditional at small degree") {
    auto rows = rectangle_scan(4, {SuperSpace{1, 0}, SuperSpace{0, 1}, SuperSpace{1, 1},
                                   SuperSpace{2, 0}, SuperSpace{2, 1}});
    for (const auto& row : rows) {
        bool flagged = row.f_nonzero && row.contractions_zero;
        bool predicted = row.is_pinned_rectangle && row.f_nonzero;
        CHECK(flagged == predicted);
    }
}

TEST_CASE("direct sum decomposition") {
    CHECK(direct_sum_check(P("2"), SuperSpace{1, 0}, SuperSpace{1, 0}));
    CHECK(schur_dim(P("2"), SuperSpace{2, 0}) == DimPair{3, 0});
    CHECK(direct_sum_check(P("1"), SuperSpace{2, 1}, SuperSpace{1, 1}));
    CHECK(direct_sum_check(P("1,1"), SuperSpace{1, 0}, SuperSpace{0, 1}));
    CHECK(direct_sum_check(P("2,1"), SuperSpace{1, 1}, SuperSpace{1, 0}));
}

TEST_CASE("hook dimension sums") {
    CHECK(hook_dimension_sum(SuperSpace{1, 0}, 2) == 1);
    CHECK(hook_dimension_sum(SuperSpace{1, 1}, 2) == 2);
    CHECK(hook_dimension_sum(SuperSpace{2, 0}, 2) == 2);
    CHECK(hook_dimension_sum(SuperSpace{1, 1}, 3) == 6); // both hooks of every shape
}
