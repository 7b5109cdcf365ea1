#include <random>

#include "doctest.h"
#include "mucalc/kripke.hpp"
#include "mucalc/parse_error.hpp"
#include "testutil.hpp"

using namespace mucalc;

namespace {

PointedSystem chain_abc() {
    return parse_kripke("state a\nstate b\nstate c\ntrans a b\ntrans b c\ninit a\n");
}

}  // namespace

TEST_CASE("successors") {
    const PointedSystem single = parse_kripke("state s\ninit s\n");
    CHECK(single.structure.successors("s").empty());

    CHECK(chain_abc().structure.successors("a") == StateSet{"b"});

    const PointedSystem loop = parse_kripke("state s\ntrans s s\ninit s\n");
    CHECK(loop.structure.successors("s") == StateSet{"s"});

    CHECK_THROWS_AS(single.structure.successors("missing"), std::invalid_argument);
}

TEST_CASE("predecessors") {
    CHECK(chain_abc().structure.predecessors("c") == StateSet{"b"});
    CHECK(chain_abc().structure.predecessors("a").empty());

    const PointedSystem diamond =
        parse_kripke("state a\nstate b\nstate c\ntrans a c\ntrans b c\ninit a\n");
    CHECK(diamond.structure.predecessors("c") == StateSet{"a", "b"});
}

TEST_CASE("parsing and validation errors") {
    const PointedSystem labeled = parse_kripke("state s0 p\ninit s0\n");
    CHECK(labeled.structure.labels("s0") == std::set<std::string>{"p"});
    CHECK(labeled.structure.transitions().empty());
    CHECK(labeled.initial == "s0");

    CHECK_THROWS_AS(parse_kripke("state s0\ntrans s0 s9\ninit s0\n"), ParseError);
    CHECK_THROWS_AS(parse_kripke("state s0\nstate s0\ninit s0\n"), ParseError);
    CHECK_THROWS_AS(parse_kripke("state s0\n"), ParseError);                  // no init
    CHECK_THROWS_AS(parse_kripke("state s0\ninit s0\ninit s0\n"), ParseError);
    CHECK_THROWS_AS(parse_kripke("state s0\ninit s1\n"), ParseError);
    CHECK_THROWS_AS(parse_kripke("init s0\n"), ParseError);                   // no states
    CHECK_THROWS_AS(parse_kripke("state s0\nfrobnicate\ninit s0\n"), ParseError);
}

TEST_CASE("print then parse a three-state cycle") {
    const PointedSystem cycle = parse_kripke(
        "state s2 q\nstate s0 p q\nstate s1\n"
        "trans s0 s1\ntrans s1 s2\ntrans s2 s0\ninit s1\n");
    CHECK(parse_kripke(print_kripke(cycle)) == cycle);
}

TEST_CASE("adjointness of successors and predecessors") {
    std::mt19937 rng(20240814);
    for (int i = 0; i < 100; ++i) {
        const PointedSystem p = testutil::random_kripke(rng, 6, 0.1, 0.9, {"p", "q"});
        for (const std::string& s : p.structure.states()) {
            for (const std::string& t : p.structure.states()) {
                const bool forward = p.structure.successors(s).count(t) > 0;
                const bool backward = p.structure.predecessors(t).count(s) > 0;
                CHECK(forward == backward);
            }
        }
    }
}

TEST_CASE("parse/print round-trip on random structures") {
    std::mt19937 rng(20240815);
    for (int i = 0; i < 100; ++i) {
        const PointedSystem p = testutil::random_kripke(rng, 6, 0.0, 1.0, {"p", "q", "r"});
        CHECK(parse_kripke(print_kripke(p)) == p);
    }
}
