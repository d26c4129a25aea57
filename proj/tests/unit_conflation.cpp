#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctl/conflation.hpp"
#include "fixtures_common.hpp"

using namespace ctl;
using namespace ctl_test;

static Catalog square_catalog(std::uint32_t p) {
    auto alg = square_algebra(p);
    std::vector<Representation> mem;
    for (int v = 0; v < 4; ++v) mem.push_back(alg->projective(v));
    mem.push_back(alg->injective(1));
    mem.push_back(alg->injective(2));
    mem.push_back(alg->injective(3));
    mem.push_back(alg->simple(1));
    mem.push_back(alg->simple(2));
    mem.push_back(syzygy(alg->simple(3)).omega.named("M1"));
    auto p4 = alg->projective(3);
    std::vector<FMatrix> soc;
    for (int v = 0; v < 4; ++v) {
        FMatrix s(p4.dim(v), v == 0 ? 1 : 0, p);
        if (v == 0) s.set(0, 0, 1);
        soc.push_back(std::move(s));
    }
    mem.push_back(quotient_representation(p4, soc).rep.named("M2"));
    return Catalog(alg, std::move(mem));
}

using Multiset = std::map<std::string, int>;

TEST_CASE("zero class realizes the split conflation") {
    auto cat = square_catalog(2);
    ExtSpace es = ext_space(cat.member("S2"), cat.member("P1"));
    REQUIRE(es.dim() == 1);
    Conflation zero = realize_extension(es, {0});
    CHECK(is_split(zero));
    CHECK(decompose(zero.mid(), cat) == Multiset{{"P1", 1}, {"S2", 1}});
}

TEST_CASE("the five named sequences are realized with the stated middles") {
    struct Row {
        const char *quot, *sub;
        Multiset middle;
    };
    const std::vector<Row> rows = {
        {"S2", "P1", {{"P2", 1}}},
        {"S2", "P3", {{"M1", 1}}},
        {"I2", "P3", {{"P4", 1}}},
        {"I2", "M1", {{"P4", 1}, {"S2", 1}}},
        {"I2", "S3", {{"M2", 1}}},
    };
    for (std::uint32_t p : {2u, 3u}) {
        auto cat = square_catalog(p);
        for (const auto& row : rows) {
            ExtSpace es = ext_space(cat.member(row.quot), cat.member(row.sub));
            REQUIRE(es.dim() == 1);
            Conflation c = realize_extension(es, {1});
            CHECK(!is_split(c));
            CHECK(decompose(c.mid(), cat) == row.middle);
        }
    }
}

TEST_CASE("conflations with projective quotient split") {
    auto cat = square_catalog(2);
    auto alg = cat.algebra();
    for (const char* q : {"P1", "P2", "P3", "P4"})
        for (const char* s : {"S2", "M1", "I2"}) {
            Conflation c = split_conflation(cat.member(s), cat.member(q));
            CHECK(is_split(c));
        }
    /* any conflation with projective quotient is split: enumerate none exist
     * beyond the split one since ext vanishes */
    CHECK(enumerate_middle_terms(cat.member("P4"), cat.member("M1"), cat, true).size() == 1);
}

TEST_CASE("scalar multiples of a class share their middle term") {
    auto cat = square_catalog(3);
    ExtSpace es = ext_space(cat.member("I2"), cat.member("M1"));
    REQUIRE(es.dim() == 1);
    Conflation c1 = realize_extension(es, {1});
    Conflation c2 = realize_extension(es, {2});
    CHECK(decompose(c1.mid(), cat) == decompose(c2.mid(), cat));
    CHECK(is_isomorphic(c1.mid(), c2.mid()));
}

TEST_CASE("enumerate middle terms") {
    auto cat = square_catalog(2);
    auto got = enumerate_middle_terms(cat.member("S2"), cat.member("P1"), cat, true);
    std::set<Multiset> expect{{{"P1", 1}, {"S2", 1}}, {{"P2", 1}}};
    CHECK(got == expect);

    /* vanishing ext: only the split middle */
    auto one = enumerate_middle_terms(cat.member("S2"), cat.member("P2"), cat, true);
    CHECK(one == std::set<Multiset>{{{"P2", 1}, {"S2", 1}}});

    /* without dedup the same middles appear */
    auto cat3 = square_catalog(3);
    auto full = enumerate_middle_terms(cat3.member("S2"), cat3.member("P1"), cat3, false);
    CHECK(full == std::set<Multiset>{{{"P1", 1}, {"S2", 1}}, {{"P2", 1}}});
}

TEST_CASE("middle-term enumeration respects its cap") {
    auto cat = square_catalog(2);
    CHECK_THROWS_AS(
        enumerate_middle_terms(cat.member("S2"), cat.member("P1"), cat, true, 1),
        CapExceeded);
}

TEST_CASE("pullback degenerate cases") {
    auto cat = square_catalog(2);
    auto alg = cat.algebra();
    auto zero = alg->zero_module();
    const auto& b = cat.member("P4");
    const auto& c = cat.member("I2");

    /* common target zero: product */
    Pullback pb = pullback(ModuleMap::zero(b, zero), ModuleMap::zero(c, zero));
    CHECK(pb.rep.total_dim() == b.total_dim() + c.total_dim());
    CHECK(is_isomorphic(pb.rep, direct_sum({b, c}, alg).rep));

    /* second leg an isomorphism: projection to the first is one too */
    Pullback pb2 = pullback(ModuleMap::identity(b), ModuleMap::identity(b));
    CHECK(pb2.to_first.is_isomorphism());

    /* square commutes exactly */
    ExtSpace es = ext_space(cat.member("S2"), cat.member("P1"));
    Conflation e = realize_extension(es, {1});
    Pullback pb3 = pullback(e.deflation(), ModuleMap::identity(e.quot()));
    for (int v = 0; v < 4; ++v)
        CHECK(e.deflation().component(v) * pb3.to_first.component(v) ==
              pb3.to_second.component(v));
}

TEST_CASE("pushout degenerate cases") {
    auto cat = square_catalog(2);
    auto alg = cat.algebra();
    auto zero = alg->zero_module();
    const auto& b = cat.member("M1");
    const auto& c = cat.member("S3");

    Pushout po = pushout(ModuleMap::zero(zero, b), ModuleMap::zero(zero, c));
    CHECK(is_isomorphic(po.rep, direct_sum({b, c}, alg).rep));

    Pushout po2 = pushout(ModuleMap::identity(b), ModuleMap::identity(b));
    CHECK(po2.from_second.is_isomorphism());
}

TEST_CASE("pushout reproduces the cocycle realization") {
    /* realize via the ext machinery, then via an explicit pushout of the
     * presentation, and compare middles */
    auto cat = square_catalog(2);
    ExtSpace es = ext_space(cat.member("S2"), cat.member("P1"));
    Conflation via_realize = realize_extension(es, {1});
    ModuleMap phi = es.cocycle({1});
    Pushout po = pushout(phi, es.syz.inclusion);
    CHECK(is_isomorphic(po.rep, via_realize.mid()));
}

TEST_CASE("search for special precovers") {
    auto cat = square_catalog(2);
    std::set<std::string> all = cat.name_set();
    std::set<std::string> proj{"P1", "P2", "P3", "P4"};
    SearchBounds bounds;

    /* member of the class: trivial witness */
    SearchResult r = search_special_precover(cat.member("P2"), proj, all, cat, bounds);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.witness->sub().is_zero());

    /* projective-cover style witness for any module */
    SearchResult r2 = search_special_precover(cat.member("I2"), proj, all, cat, bounds);
    REQUIRE(r2.status == SearchStatus::found);
    auto mid_dec = decompose(r2.witness->mid(), cat);
    for (const auto& [n, c] : mid_dec) CHECK(proj.count(n));
    CHECK(decompose(r2.witness->quot(), cat) == Multiset{{"I2", 1}});

    /* impossible: X = {S2}, Y = {P2} and A = P1; Ext^1(P1,.) = 0 */
    SearchResult r3 = search_special_precover(cat.member("P1"), {"S2"}, {"P2"}, cat, bounds);
    CHECK(r3.status == SearchStatus::impossible);
}

TEST_CASE("search for special preenvelopes") {
    auto cat = square_catalog(2);
    std::set<std::string> all = cat.name_set();
    std::set<std::string> proj{"P1", "P2", "P3", "P4"};
    std::set<std::string> inj{"P4", "I2", "I3", "I4"};
    SearchBounds bounds;

    SearchResult r = search_special_preenvelope(cat.member("I3"), proj, all, cat, bounds);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.witness->quot().is_zero());

    /* injective envelopes exist for every member */
    for (const auto& name : cat.names()) {
        SearchResult e = search_special_preenvelope(cat.member(name), all, inj, cat, bounds);
        REQUIRE(e.status == SearchStatus::found);
        for (const auto& [n, c] : decompose(e.witness->mid(), cat)) CHECK(inj.count(n));
    }
}

TEST_CASE("pullback composition of two precovers") {
    auto cat = square_catalog(2);
    std::set<std::string> all = cat.name_set();
    std::set<std::string> proj{"P1", "P2", "P3", "P4"};
    SearchBounds bounds;

    /* degenerate pairs: (all, inj) then (proj, all) gives a projective precover */
    const auto& a = cat.member("M2");
    SearchResult c1 = search_special_precover(a, all, all, cat, bounds);
    REQUIRE(c1.status == SearchStatus::found);
    SearchResult c2 =
        search_special_precover(c1.witness->mid(), proj, all, cat, bounds);
    REQUIRE(c2.status == SearchStatus::found);
    ComposedWitness w = compose_precover(*c1.witness, *c2.witness);
    CHECK(w.main.quot() == a);
    for (const auto& [n, c] : decompose(w.main.mid(), cat)) CHECK(proj.count(n));
}

TEST_CASE("direct sums of conflations") {
    auto cat = square_catalog(2);
    ExtSpace es = ext_space(cat.member("S2"), cat.member("P1"));
    Conflation c = realize_extension(es, {1});
    Conflation two = direct_sum_conflations({c, c});
    CHECK(two.mid().total_dim() == 2 * c.mid().total_dim());
    CHECK(!is_split(two));
    CHECK(decompose(two.mid(), cat) == Multiset{{"P2", 2}});
}

TEST_CASE("split detection against decompose") {
    auto cat = square_catalog(2);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto& c = cat.member(static_cast<int>(rng() % 11));
        const auto& a = cat.member(static_cast<int>(rng() % 11));
        ExtSpace es = ext_space(c, a);
        std::vector<std::uint32_t> t(es.dim(), 0);
        if (es.dim() > 0 && rng() % 2) t[rng() % es.dim()] = 1;
        Conflation conf = realize_extension(es, t);
        bool split = is_split(conf);
        Multiset expect = decompose(direct_sum({a, c}, cat.algebra()).rep, cat);
        CHECK(split == (decompose(conf.mid(), cat) == expect));
    }
}
