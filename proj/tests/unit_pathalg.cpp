#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctl/rep.hpp"
#include "fixtures_common.hpp"

using namespace ctl;
using namespace ctl_test;

TEST_CASE("square algebra path basis has dimension 9") {
    for (std::uint32_t p : {2u, 3u}) {
        auto alg = square_algebra(p);
        CHECK(alg->dimension() == 9);
        /* e1..e4, the four arrows, one surviving length-2 class */
        CHECK(alg->basis_paths(0, 0).size() == 1);
        CHECK(alg->basis_paths(1, 1).size() == 1);
        CHECK(alg->basis_paths(2, 2).size() == 1);
        CHECK(alg->basis_paths(3, 3).size() == 1);
        CHECK(alg->basis_paths(3, 2).size() == 1);
        CHECK(alg->basis_paths(3, 1).size() == 1);
        CHECK(alg->basis_paths(2, 0).size() == 1);
        CHECK(alg->basis_paths(1, 0).size() == 1);
        CHECK(alg->basis_paths(3, 0).size() == 1);
        CHECK(alg->basis_paths(0, 3).size() == 0);
    }
}

TEST_CASE("a2 quiver has dimension 3") {
    CHECK(a2_algebra(2)->dimension() == 3);
}

TEST_CASE("loop quiver does not terminate") {
    CHECK_THROWS_AS(loop_algebra(2, 10), NonTerminating);
}

TEST_CASE("the identified length-2 paths act equally") {
    auto alg = square_algebra(3);
    QPath ba{3, 0, {0, 2}};   // alpha then beta
    QPath bpap{3, 0, {1, 3}}; // alphap then betap
    auto c1 = alg->reduce_path(ba);
    auto c2 = alg->reduce_path(bpap);
    REQUIRE(c1.size() == 1);
    REQUIRE(c2.size() == 1);
    CHECK(c1[0].first == c2[0].first);  // same normal form class
}

TEST_CASE("projective modules of the square algebra") {
    auto alg = square_algebra(2);
    auto p4 = alg->projective(3);
    CHECK(p4.dims() == std::vector<int>{1, 1, 1, 1});
    auto p1 = alg->projective(0);
    CHECK(p1.dims() == std::vector<int>{1, 0, 0, 0});
    CHECK(p1 == alg->simple(0));  // vertex 1 is a sink
    auto p2 = alg->projective(1);
    CHECK(p2.dims() == std::vector<int>{1, 1, 0, 0});
    auto p3 = alg->projective(2);
    CHECK(p3.dims() == std::vector<int>{1, 0, 1, 0});

    auto a2 = a2_algebra(2);
    CHECK(a2->projective(0).dims() == std::vector<int>{1, 1});
}

TEST_CASE("injective modules of the square algebra") {
    auto alg = square_algebra(2);
    CHECK(alg->injective(3).dims() == std::vector<int>{0, 0, 0, 1});
    CHECK(alg->injective(3) == alg->simple(3));
    /* support {2,4}: the only paths ending at vertex 2 are e2 and alphap */
    CHECK(alg->injective(1).dims() == std::vector<int>{0, 1, 0, 1});
    CHECK(alg->injective(2).dims() == std::vector<int>{0, 0, 1, 1});
    CHECK(alg->injective(0).dims() == std::vector<int>{1, 1, 1, 1});

    auto a2 = a2_algebra(2);
    CHECK(a2->injective(1).dims() == std::vector<int>{1, 1});
}

TEST_CASE("simple modules") {
    auto alg = square_algebra(2);
    for (int v = 0; v < 4; ++v) {
        auto s = alg->simple(v);
        for (int w = 0; w < 4; ++w) CHECK(s.dim(w) == (v == w ? 1 : 0));
        CHECK(verify_relations(*alg, s.dims(), s.maps()));
    }
    auto z = alg->zero_module();
    CHECK(verify_relations(*alg, z.dims(), z.maps()));
}

TEST_CASE("canonical modules satisfy the relations") {
    for (std::uint32_t p : {2u, 3u}) {
        auto alg = square_algebra(p);
        for (int v = 0; v < 4; ++v) {
            auto pr = alg->projective(v);
            auto in = alg->injective(v);
            CHECK(verify_relations(*alg, pr.dims(), pr.maps()));
            CHECK(verify_relations(*alg, in.dims(), in.maps()));
        }
    }
}

TEST_CASE("verify_relations rejects a broken square") {
    auto alg = square_algebra(2);
    /* all spaces K, alpha path acts as identity, alphap path as zero */
    std::vector<int> dims{1, 1, 1, 1};
    std::vector<FMatrix> maps;
    maps.push_back(FMatrix::from_rows(2, {{1}}));  // alpha
    maps.push_back(FMatrix::from_rows(2, {{0}}));  // alphap
    maps.push_back(FMatrix::from_rows(2, {{1}}));  // beta
    maps.push_back(FMatrix::from_rows(2, {{1}}));  // betap
    CHECK(!verify_relations(*alg, dims, maps));
    CHECK_THROWS_AS(Representation(alg, dims, maps), ShapeMismatch);
}

TEST_CASE("opposite algebra round trip") {
    auto alg = square_algebra(2);
    auto op = alg->opposite();
    CHECK(op->dimension() == alg->dimension());
    CHECK(op->opposite() == alg);  // pointer identity

    /* dual of a projective is the injective over the opposite side */
    auto p4 = alg->projective(3);
    auto d = dual_module(p4);
    CHECK(d.algebra() == op);
    CHECK(dual_module(d) == p4);
}

TEST_CASE("mixed-length admissible relation reduces across strata") {
    /* two routes 1 -> 4 of lengths 2 and 3 get identified */
    AlgebraPresentation pres;
    pres.characteristic = 2;
    pres.quiver.vertices = {"1", "2", "3", "4"};
    pres.quiver.arrows = {
        {"a", 0, 1}, {"b", 1, 3},  // direct route, length 2
        {"c", 0, 2}, {"d", 2, 1},  // detour through vertex 3, then b
    };
    Relation rel;
    rel.terms.push_back({1, {0, 1}});     // a then b
    rel.terms.push_back({1, {2, 3, 1}});  // c then d then b
    pres.relations.push_back(rel);
    auto alg = Algebra::build(pres);
    /* e1..e4, four arrows, [a,b] ~ [c,d,b], [c,d], [d,b] */
    CHECK(alg->dimension() == 11);
    auto combo = alg->reduce_path(QPath{0, 3, {2, 3, 1}});
    REQUIRE(combo.size() == 1);
    CHECK(alg->basis()[combo[0].first].arrows == std::vector<int>{0, 1});
}
