#include <random>

#include "doctest.h"
#include "mucalc/automaton.hpp"
#include "mucalc/parse_error.hpp"
#include "testutil.hpp"

using namespace mucalc;

namespace {

Automaton single_state(const TransitionCondition& c, int priority) {
    return Automaton::make({"q"}, "q", {{"q", c}}, {{"q", priority}});
}

}  // namespace

TEST_CASE("transition graph follows mentioned states") {
    CHECK(transition_graph(single_state(TransitionCondition::const1(), 0))[0].empty());

    const Automaton loop = single_state(TransitionCondition::box("q"), 0);
    CHECK(transition_graph(loop)[0] == std::vector<int>{0});

    const Automaton split = Automaton::make(
        {"q", "q1", "q2"}, "q",
        {{"q", TransitionCondition::conj("q1", "q2")},
         {"q1", TransitionCondition::const1()},
         {"q2", TransitionCondition::const0()}},
        {{"q", 0}, {"q1", 0}, {"q2", 0}});
    CHECK(transition_graph(split)[0] == std::vector<int>{1, 2});
}

TEST_CASE("index counts priorities inside cycle-bearing components") {
    // One state with a self-loop: one component, one priority.
    CHECK(index(single_state(TransitionCondition::box("q"), 0)) == 1);

    // Acyclic automata have no cycle-bearing component at all.
    const Automaton acyclic = Automaton::make(
        {"a", "b"}, "a",
        {{"a", TransitionCondition::state("b")}, {"b", TransitionCondition::const1()}},
        {{"a", 3}, {"b", 2}});
    CHECK(index(acyclic) == 0);

    // Two-state loop with two distinct priorities.
    const Automaton loop2 = Automaton::make(
        {"a", "b"}, "a",
        {{"a", TransitionCondition::diamond("b")}, {"b", TransitionCondition::state("a")}},
        {{"a", 1}, {"b", 2}});
    CHECK(index(loop2) == 2);
}

TEST_CASE("index is bounded by the number of distinct priorities") {
    std::mt19937 rng(20240822);
    for (int i = 0; i < 100; ++i) {
        const Automaton a = testutil::random_automaton(rng, 6);
        std::set<int> distinct;
        for (const std::string& q : a.states()) distinct.insert(a.priority(q));
        CHECK(index(a) <= static_cast<int>(distinct.size()));
    }
}

TEST_CASE("index is invariant under state renaming") {
    std::mt19937 rng(20240823);
    for (int i = 0; i < 50; ++i) {
        const Automaton a = testutil::random_automaton(rng, 6);
        const auto rename = [](const std::string& q) { return "renamed_" + q; };
        std::vector<std::string> states;
        std::map<std::string, TransitionCondition> delta;
        std::map<std::string, int> priorities;
        for (const std::string& q : a.states()) {
            states.push_back(rename(q));
            TransitionCondition c = a.delta(q);
            if (!c.q1.empty()) c.q1 = rename(c.q1);
            if (!c.q2.empty()) c.q2 = rename(c.q2);
            delta[rename(q)] = c;
            priorities[rename(q)] = a.priority(q);
        }
        const Automaton b = Automaton::make(states, rename(a.initial()), delta, priorities);
        CHECK(index(a) == index(b));
    }
}

TEST_CASE("dump format round-trips") {
    std::mt19937 rng(20240824);
    for (int i = 0; i < 100; ++i) {
        const Automaton a = testutil::random_automaton(rng, 6);
        CHECK(parse_automaton(print_automaton(a)) == a);
    }
}

TEST_CASE("dump format rejects malformed input") {
    CHECK_THROWS_AS(parse_automaton("state q prio 0 delta 1\n"), ParseError);       // no init
    CHECK_THROWS_AS(parse_automaton("init q\n"), ParseError);                        // q undeclared
    CHECK_THROWS_AS(parse_automaton("state q prio -1 delta 1\ninit q\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("state q prio 0 delta st q2\ninit q\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("state q prio 0 delta nonsense\ninit q\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("state q prio 0 delta and q\ninit q\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("state q prio 0 delta 1\nstate q prio 0 delta 1\ninit q\n"),
                    ParseError);
}

TEST_CASE("automaton construction validates inputs") {
    CHECK_THROWS_AS(Automaton::make({}, "q", {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton::make({"q"}, "other", {{"q", TransitionCondition::const1()}}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Automaton::make({"q"}, "q", {}, {}), std::invalid_argument);  // delta not total
    CHECK_THROWS_AS(
        Automaton::make({"q"}, "q", {{"q", TransitionCondition::state("ghost")}}, {}),
        std::invalid_argument);
}
