#include "superschur/partition.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace superschur;

namespace {
Partition P(const std::string& wire) { return Partition::parse(wire); }
} // namespace

TEST_CASE("construction canonicalizes and validates") {
    CHECK(Partition({2, 1, 0, 0}) == P("2,1"));
    CHECK(Partition().empty());
    CHECK(P("").size() == 0);
    CHECK(P("3,1").size() == 4);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
}

TEST_CASE("transpose") {
    CHECK(P("3,1").transpose() == P("2,1,1"));
    CHECK(P("2,2").transpose() == P("2,2"));
    CHECK(Partition().transpose() == Partition());
    for (int d = 0; d <= 6; ++d)
        for (const Partition& lambda : partitions_of(d))
            CHECK(lambda.transpose().transpose() == lambda);
}

TEST_CASE("containment") {
    CHECK(P("2,2").contains(P("2,1")));
    CHECK_FALSE(P("3,1").contains(P("2,2")));
    CHECK(P("2,2").contains(P("2,2")));
    CHECK(P("1").contains(Partition()));
}

TEST_CASE("rectangles") {
    CHECK(rectangle(1, 1) == P("2,2"));
    CHECK(rectangle(0, 0) == P("1"));
    CHECK(rectangle(2, 0) == P("3"));
    CHECK(realized_rectangle(2, 0) == P("1,1,1"));
    CHECK(realized_rectangle(1, 1) == P("2,2"));
    CHECK(realized_rectangle(0, 1) == P("2"));
}

TEST_CASE("standard tableau counts match the enumeration oracle") {
    CHECK(count_standard_tableaux(P("2,1")) == 2);
    CHECK(count_standard_tableaux(P("2,2")) == 2);
    CHECK(count_standard_tableaux(P("5")) == 1);
    CHECK(count_standard_tableaux(Partition()) == 1);
    for (int d = 0; d <= 6; ++d)
        for (const Partition& lambda : partitions_of(d))
            CHECK(count_standard_tableaux(lambda) ==
                  oracles::standard_tableaux_by_enumeration(lambda));
}

TEST_CASE("weyl dimension against the semistandard oracle") {
    CHECK(weyl_dim(P("2,1"), 2) == 2);
    CHECK(weyl_dim(P("2,2"), 3) == 6);
    CHECK(weyl_dim(P("1,1,1"), 2) == 0);
    for (int d = 0; d <= 6; ++d)
        for (const Partition& lambda : partitions_of(d))
            for (int m = 1; m <= 4; ++m)
                CHECK(weyl_dim(lambda, m) ==
                      oracles::semistandard_tableaux_by_enumeration(lambda, m));
}

TEST_CASE("littlewood-richardson examples") {
    CHECK(lr_coeff(P("2,1"), P("1"), P("1,1")) == 1);
    CHECK(lr_coeff(P("2"), P("1"), P("1")) == 1);
    CHECK(lr_coeff(P("1,1,1"), P("1"), P("1")) == 0);
    CHECK(lr_coeff(P("3,2,1"), P("2,1"), P("2,1")) == 2);
    CHECK(lr_coeff(P("2,2"), P("2,2"), Partition()) == 1);
}

TEST_CASE("littlewood-richardson symmetry and transpose equivariance") {
    for (int d = 0; d <= 6; ++d)
        for (const Partition& lambda : partitions_of(d))
            for (int k = 0; k <= d; ++k)
                for (const Partition& mu : partitions_of(k))
                    for (const Partition& nu : partitions_of(d - k)) {
                        long long c = lr_coeff(lambda, mu, nu);
                        CHECK(c == lr_coeff(lambda, nu, mu));
                        CHECK(c == lr_coeff(lambda.transpose(), mu.transpose(), nu.transpose()));
                    }
}

TEST_CASE("littlewood-richardson induction-dimension identity") {
    for (int total = 0; total <= 6; ++total)
        for (int k = 0; k <= total; ++k)
            for (const Partition& mu : partitions_of(k))
                for (const Partition& nu : partitions_of(total - k)) {
                    Integer sum = 0;
                    for (const Partition& lambda : partitions_of(total))
                        sum += Integer(static_cast<long>(lr_coeff(lambda, mu, nu))) *
                               count_standard_tableaux(lambda);
                    CHECK(sum == binomial(total, k) * count_standard_tableaux(mu) *
                                     count_standard_tableaux(nu));
                }
}

TEST_CASE("wire format round trip") {
    for (int d = 0; d <= 5; ++d)
        for (const Partition& lambda : partitions_of(d))
            CHECK(Partition::parse(lambda.to_string()) == lambda);
}
