#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctl/fp.hpp"

using namespace ctl;

TEST_CASE("rank basics") {
    CHECK(FMatrix::identity(3, 2).rank() == 3);
    CHECK(FMatrix(2, 3, 3).rank() == 0);
    CHECK(FMatrix::from_rows(2, {{1, 1}, {1, 1}}).rank() == 1);
}

TEST_CASE("kernel basis") {
    CHECK(FMatrix::identity(4, 5).kernel_basis().cols() == 0);
    CHECK(FMatrix(2, 3, 2).kernel_basis().cols() == 3);

    FMatrix m = FMatrix::from_rows(2, {{1, 1}});
    FMatrix k = m.kernel_basis();
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == 1);
    CHECK((m * k).is_zero());
}

TEST_CASE("solve_right") {
    FMatrix id = FMatrix::identity(3, 5);
    FMatrix b = FMatrix::from_rows(5, {{2}, {3}, {4}});
    auto x = id.solve_right(b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    FMatrix z(2, 2, 3);
    auto xz = z.solve_right(FMatrix(2, 1, 3));
    REQUIRE(xz.has_value());
    CHECK(xz->is_zero());

    /* free variables fixed to zero */
    FMatrix a = FMatrix::from_rows(2, {{1, 0}});
    auto xa = a.solve_right(FMatrix::from_rows(2, {{1}}));
    REQUIRE(xa.has_value());
    CHECK(xa->at(0, 0) == 1);
    CHECK(xa->at(1, 0) == 0);

    /* unsolvable system */
    FMatrix bad = FMatrix::from_rows(2, {{1}, {1}});
    CHECK(!FMatrix::from_rows(2, {{1}, {0}}).solve_right(bad)->is_zero());
    CHECK(!FMatrix(2, 1, 2).solve_right(bad).has_value());

    CHECK_THROWS_AS(a.solve_right(FMatrix(3, 1, 2)), DimensionMismatch);
}

TEST_CASE("characteristic is never coerced") {
    FMatrix a(2, 2, 2), b(2, 2, 3);
    CHECK_THROWS_AS(a * b, CharacteristicMismatch);
    CHECK_THROWS_AS(a + b, CharacteristicMismatch);
    CHECK_THROWS_AS(FScalar(1, 2) + FScalar(1, 3), CharacteristicMismatch);
    CHECK_THROWS_AS(FMatrix(1, 1, 4), Error);
}

TEST_CASE("rank-nullity and transpose rank on random matrices") {
    std::mt19937 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 40; ++trial) {
            int r = static_cast<int>(rng() % 6);
            int c = static_cast<int>(rng() % 6);
            FMatrix m(r, c, p);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) m.set(i, j, static_cast<long long>(rng() % p));
            CHECK(m.rank() + m.kernel_basis().cols() == c);
            CHECK(m.rank() == m.transpose().rank());
            CHECK((m * m.kernel_basis()).is_zero());

            FMatrix x(c, 2, p);
            for (int i = 0; i < c; ++i)
                for (int j = 0; j < 2; ++j) x.set(i, j, static_cast<long long>(rng() % p));
            FMatrix b = m * x;
            auto sol = m.solve_right(b);
            REQUIRE(sol.has_value());
            CHECK(m * *sol == b);  // exact, no tolerance
        }
    }
}

TEST_CASE("inverse") {
    FMatrix m = FMatrix::from_rows(5, {{1, 2}, {3, 4}});
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
    CHECK((*inv * m).is_identity());
    CHECK(!FMatrix::from_rows(2, {{1, 1}, {1, 1}}).inverse().has_value());
}

TEST_CASE("scalar field ops") {
    FScalar a(5, 3);
    CHECK(a.value == 2);
    CHECK(FScalar(-1, 3).value == 2);
    CHECK((a.inv() * a).value == 1);
    CHECK(a.neg().value == 1);
}
