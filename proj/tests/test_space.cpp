#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "estarlab/enumerate.hpp"
#include "estarlab/examples.hpp"
#include "estarlab/space.hpp"
#include "oracles.hpp"

using namespace estarlab;

TEST_CASE("topology validation accepts the worked spaces") {
    auto sp = validate_topology({"w1", "w2", "w3"},
                                {{}, {"w1", "w2", "w3"}, {"w2"}, {"w3"}, {"w1", "w2"}, {"w2", "w3"}});
    CHECK(sp->opens().size() == 6);

    auto one = validate_topology({"u1"}, {{}, {"u1"}});
    CHECK(one->point_count() == 1);

    auto two = validate_topology({"a", "b"}, {{}, {"a", "b"}, {"a"}, {"b"}});
    CHECK(two->opens().size() == 4);
}

TEST_CASE("topology validation rejects broken families with a witness") {
    CHECK_THROWS_WITH_AS(validate_topology({"a", "b"}, {{}, {"a"}, {"b"}}),
                         doctest::Contains("missing"), Error);
    try {
        validate_topology({"a", "b", "c"}, {{}, {"a", "b", "c"}, {"a"}, {"b"}});
        FAIL("expected NotATopology");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_a_topology);
        CHECK(std::string(e.what()).find("{a}") != std::string::npos);
    }
    CHECK_THROWS_AS(validate_topology({"a", "a"}, {{}, {"a"}}), Error);
    CHECK_THROWS_AS(validate_topology({}, {}), Error);
}

TEST_CASE("completion mode closes a family into the smallest topology") {
    auto sp = validate_topology({"a", "b", "c"}, {{"a"}, {"b"}}, TopologyMode::complete);
    CHECK(sp->is_open(0));
    CHECK(sp->is_open(sp->universe()));
    CHECK(sp->is_open(0b011));  // {a}∪{b}
    CHECK(sp->opens().size() == 5);
}

TEST_CASE("interior and closure match the scan oracles on every space up to 3 points") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& sp : enumerate_topologies(n)) {
            for (Mask a = 0; a <= sp->universe(); ++a) {
                CHECK(sp->interior(a) == oracle::naive_interior(sp->opens(), a));
                CHECK(sp->closure(a) ==
                      oracle::naive_closure(sp->opens(), sp->universe(), a));
            }
        }
    }
}

TEST_CASE("closure of {z1} in the five-open space") {
    auto fx = examples::ex_3_6();
    CHECK(fx.space->closure(fx.space->mask_of({"z1"})) == fx.space->mask_of({"z1", "z3"}));
    CHECK(fx.space->interior(fx.space->universe()) == fx.space->universe());
    CHECK(fx.space->closure(0) == 0);
}

TEST_CASE("discrete space: interior is the identity") {
    std::vector<Mask> all;
    for (Mask m = 0; m < 8; ++m) all.push_back(m);
    auto sp = make_space({"t1", "t2", "t3"}, all);
    for (Mask a = 0; a <= sp->universe(); ++a) CHECK(sp->interior(a) == a);
}

TEST_CASE("delta operators") {
    auto sp = make_space({"u1", "u2", "u3"}, {0b000, 0b111, 0b001});

    SUBCASE("whole set and empty set") {
        CHECK(sp->delta_interior(sp->universe()) == sp->universe());
        CHECK(sp->delta_closure(0) == 0);
    }
    SUBCASE("Int(Cl({u1})) = X swallows the singleton") {
        CHECK(sp->delta_interior(0b001) == 0);
        for (Mask a = 1; a <= sp->universe(); ++a) CHECK(sp->delta_closure(a) == sp->universe());
    }
    SUBCASE("oracle agreement and duality on all spaces up to 3 points") {
        for (int n = 1; n <= 3; ++n) {
            for (const auto& s : enumerate_topologies(n)) {
                for (Mask a = 0; a <= s->universe(); ++a) {
                    CHECK(s->delta_closure(a) ==
                          oracle::naive_delta_closure(s->opens(), s->universe(),
                                                      s->point_count(), a));
                    CHECK(s->delta_interior(a) ==
                          oracle::naive_delta_interior(s->opens(), s->universe(),
                                                       s->point_count(), a));
                    CHECK(s->delta_interior(a) ==
                          s->complement(s->delta_closure(s->complement(a))));
                }
            }
        }
    }
    SUBCASE("regular-open sets are delta-interior fixed points") {
        auto fx = examples::ex_3_6();
        for (Mask a = 0; a <= fx.space->universe(); ++a)
            if (fx.space->is_regular_open(a)) CHECK(fx.space->delta_interior(a) == a);
    }
}

TEST_CASE("regular-open classification in the five-open space") {
    auto fx = examples::ex_3_6();
    const FiniteSpace& sp = *fx.space;
    CHECK(sp.is_regular_open(sp.mask_of({"z1"})));
    CHECK(sp.is_regular_open(sp.universe()));
    CHECK(!sp.is_regular_open(sp.mask_of({"z1", "z2"})));
}

TEST_CASE("e*-open families") {
    SUBCASE("single nontrivial open set: every subset is e*-open") {
        auto sp = make_space({"u1", "u2", "u3"}, {0b000, 0b111, 0b001});
        CHECK(sp->estar_opens().size() == 8);
    }
    SUBCASE("discrete: the power set") {
        std::vector<Mask> all;
        for (Mask m = 0; m < 8; ++m) all.push_back(m);
        auto sp = make_space({"t1", "t2", "t3"}, all);
        CHECK(sp->estar_opens().size() == 8);
    }
    SUBCASE("{w2} is e*-open in the six-open space") {
        auto fx = examples::ex_3_1();
        CHECK(fx.space->is_estar_open(fx.space->mask_of({"w2"})));
    }
    SUBCASE("the five-open space misses exactly {z3}") {
        auto fx = examples::ex_3_6();
        CHECK(fx.space->estar_opens().size() == 7);
        CHECK(!fx.space->is_estar_open(fx.space->mask_of({"z3"})));
        CHECK(fx.space->is_estar_open(fx.space->mask_of({"z2", "z3"})));
        CHECK(fx.space->is_estar_open(fx.space->mask_of({"z1", "z3"})));
    }
    SUBCASE("definition sweep oracle on every space up to 3 points") {
        for (int n = 1; n <= 3; ++n) {
            for (const auto& sp : enumerate_topologies(n)) {
                CHECK(sp->estar_opens().members() ==
                      oracle::naive_estar_family(sp->opens(), sp->universe(),
                                                 sp->point_count()));
                CHECK(sp->estar_opens().union_closed());
                for (Mask u : sp->opens()) CHECK(sp->is_estar_open(u));
            }
        }
    }
}

TEST_CASE("e*-closure and e*-interior") {
    SUBCASE("extensive") {
        auto fx = examples::ex_3_1();
        for (Mask a = 0; a <= fx.space->universe(); ++a)
            CHECK(subset_of(a, fx.space->estar_closure(a)));
    }
    SUBCASE("with e*O the power set every set is its own closure") {
        auto sp = make_space({"u1", "u2", "u3"}, {0b000, 0b111, 0b001});
        for (Mask a = 0; a <= sp->universe(); ++a) CHECK(sp->estar_closure(a) == a);
    }
    SUBCASE("duality") {
        auto fx = examples::ex_3_6();
        for (Mask a = 0; a <= fx.space->universe(); ++a)
            CHECK(fx.space->estar_interior(a) ==
                  fx.space->complement(fx.space->estar_closure(fx.space->complement(a))));
    }
    SUBCASE("chain start against the bi-closure") {
        auto fx = examples::ex_3_1();
        const Mask w1 = fx.space->mask_of({"w1"});
        CHECK(subset_of(fx.space->estar_closure(w1), fx.ctx->closure_pointwise(w1)));
    }
}

TEST_CASE("classical operator laws on every space up to 3 points") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& sp : enumerate_topologies(n)) {
            for (Mask a = 0; a <= sp->universe(); ++a) {
                CHECK(sp->interior(sp->interior(a)) == sp->interior(a));
                CHECK(sp->closure(sp->closure(a)) == sp->closure(a));
                CHECK(sp->interior(a) == sp->complement(sp->closure(sp->complement(a))));
                if (sp->is_regular_open(a)) CHECK(sp->is_open(a));
            }
        }
    }
}
