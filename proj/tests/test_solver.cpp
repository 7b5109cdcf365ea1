#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mucalc/game.hpp"
#include "mucalc/solver.hpp"
#include "testutil.hpp"

using namespace mucalc;

namespace {

ParityGame shift_priorities(const ParityGame& g, int delta) {
    std::vector<ParityGame::Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.vertex_count(); ++v) {
        ParityGame::Vertex vertex = g.vertex(v);
        vertex.priority += delta;
        vertices.push_back(std::move(vertex));
        for (const int w : g.successors(v)) edges.emplace_back(v, w);
    }
    return ParityGame::make(std::move(vertices), edges, g.initial());
}

}  // namespace

TEST_CASE("trivial games") {
    SUBCASE("a Player-1 dead-end belongs to Player 0") {
        const ParityGame g = ParityGame::make({{"v", 1, 3}}, {});
        const WinningRegions r = solve(g);
        CHECK(r.region0 == std::set<int>{0});
        CHECK(r.region1.empty());
    }
    SUBCASE("a Player-0 dead-end belongs to Player 1") {
        const ParityGame g = ParityGame::make({{"v", 0, 2}}, {});
        const WinningRegions r = solve(g);
        CHECK(r.region1 == std::set<int>{0});
    }
    SUBCASE("even self-loop is won by Player 0") {
        const ParityGame g = ParityGame::make({{"v", 0, 0}}, {{0, 0}});
        const WinningRegions r = solve(g);
        CHECK(r.region0 == std::set<int>{0});
        CHECK(r.strategy0.moves.at(0) == 0);
    }
    SUBCASE("two-vertex even cycle owned by Player 0") {
        const ParityGame g = ParityGame::make({{"a", 0, 1}, {"b", 0, 2}}, {{0, 1}, {1, 0}});
        const WinningRegions r = solve(g);
        CHECK(r.region0 == std::set<int>{0, 1});  // max priority on the only cycle is 2
    }
}

TEST_CASE("acceptance-style games from the one-state automata") {
    // Diamond self-unfolding with odd priority over a self-loop system:
    // Player 0 moves forever through priority 1.
    const ParityGame rejecting = ParityGame::make({{"(q,s)", 0, 1}}, {{0, 0}});
    const WinningRegions r = solve(rejecting);
    CHECK(r.region1 == std::set<int>{0});
    CHECK(r.region0.empty());

    // Box self-unfolding with priority 0: Player 1 moves forever through 0.
    const ParityGame accepting = ParityGame::make({{"(q,s)", 1, 0}}, {{0, 0}});
    CHECK(solve(accepting).region0 == std::set<int>{0});
}

TEST_CASE("solver matches the brute-force oracle on random games") {
    std::mt19937 rng(20240901);
    for (int i = 0; i < 150; ++i) {
        const ParityGame g = testutil::random_game(rng, 8, 4, 3, 0.15);
        CAPTURE(print_pgsolver(g));
        const WinningRegions fast = solve(g);
        const WinningRegions slow = brute_force_solve(g);
        CHECK(fast.region0 == slow.region0);
        CHECK(fast.region1 == slow.region1);

        // determinacy: the regions partition the vertex set
        CHECK(static_cast<int>(fast.region0.size() + fast.region1.size()) == g.vertex_count());
        for (const int v : fast.region0) CHECK(fast.region1.count(v) == 0);

        // both witnesses verify on their regions, from both solvers
        CHECK(verify_strategy(g, fast.strategy0, fast.region0));
        CHECK(verify_strategy(g, fast.strategy1, fast.region1));
        CHECK(verify_strategy(g, slow.strategy0, slow.region0));
        CHECK(verify_strategy(g, slow.strategy1, slow.region1));
    }
}

TEST_CASE("brute force rejects large games") {
    std::vector<ParityGame::Vertex> vertices(13, ParityGame::Vertex{"v", 0, 0});
    CHECK_THROWS_AS(brute_force_solve(ParityGame::make(std::move(vertices), {})),
                    std::invalid_argument);
}

TEST_CASE("verify_strategy rejects broken witnesses") {
    // a (owner 0, prio 1) -> b (owner 0, prio 2), both on a cycle; Player 0
    // wins everything with the cycle strategy.
    const ParityGame g = ParityGame::make({{"a", 0, 1}, {"b", 0, 2}, {"sink", 0, 1}},
                                          {{0, 1}, {1, 0}, {1, 2}, {2, 2}});
    const WinningRegions r = solve(g);
    CHECK(r.region0 == std::set<int>{0, 1});
    CHECK(r.region1 == std::set<int>{2});

    // moving into the opponent's region fails
    Strategy bad0{0, {{0, 1}, {1, 2}}};
    CHECK_FALSE(verify_strategy(g, bad0, {0, 1}));
    // missing a move fails
    Strategy incomplete{0, {{0, 1}}};
    CHECK_FALSE(verify_strategy(g, incomplete, {0, 1}));
    // odd self-loop is a bad cycle for Player 0
    Strategy loop_bad{0, {{2, 2}}};
    CHECK_FALSE(verify_strategy(g, loop_bad, {2}));
    // non-edge moves are reported as errors
    Strategy non_edge{0, {{0, 2}}};
    CHECK_THROWS_AS(verify_strategy(g, non_edge, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("empty strategy verifies on all-opponent vertices") {
    // Every vertex owned by Player 1, priority 0, total moves: Player 1 can
    // only produce even cycles or get stuck.
    const ParityGame g =
        ParityGame::make({{"a", 1, 0}, {"b", 1, 0}}, {{0, 1}, {1, 0}, {1, 1}});
    CHECK(verify_strategy(g, Strategy{0, {}}, {0, 1}));
    CHECK(solve(g).region0 == std::set<int>{0, 1});
}

TEST_CASE("restricting a winning strategy to a reachable part keeps it winning") {
    std::mt19937 rng(20240902);
    for (int i = 0; i < 80; ++i) {
        const ParityGame g = testutil::random_game(rng, 8, 4, 3, 0.15);
        const WinningRegions r = solve(g);
        for (const int start : r.region0) {
            // inside region0 the strategy keeps the play in region0, so the
            // restricted graph never leaves it
            std::set<int> within;
            Strategy restricted{0, {}};
            std::vector<int> queue{start};
            within.insert(start);
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                const int v = queue[qi];
                if (g.vertex(v).owner == 0) {
                    const auto it = r.strategy0.moves.find(v);
                    if (it != r.strategy0.moves.end()) {
                        restricted.moves[v] = it->second;
                        if (within.insert(it->second).second) queue.push_back(it->second);
                    }
                } else {
                    for (const int w : g.successors(v)) {
                        if (within.insert(w).second) queue.push_back(w);
                    }
                }
            }
            CHECK(verify_strategy(g, restricted, within));
            if (i % 10 == 0) break;  // keep the quadratic loop cheap
        }
    }
}

namespace {

ParityGame swap_owners(const ParityGame& g) {
    std::vector<ParityGame::Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.vertex_count(); ++v) {
        ParityGame::Vertex vertex = g.vertex(v);
        vertex.owner = 1 - vertex.owner;
        vertices.push_back(std::move(vertex));
        for (const int w : g.successors(v)) edges.emplace_back(v, w);
    }
    return ParityGame::make(std::move(vertices), edges, g.initial());
}

}  // namespace

TEST_CASE("priority shifts") {
    std::mt19937 rng(20240903);
    for (int i = 0; i < 60; ++i) {
        const ParityGame g = testutil::random_game(rng, 8, 4, 3, 0.15);
        const WinningRegions base = solve(g);

        const WinningRegions up2 = solve(shift_priorities(g, 2));
        CHECK(up2.region0 == base.region0);
        CHECK(up2.region1 == base.region1);

        // Adding 1 to every priority and handing every vertex to the other
        // player relabels the players, so the regions swap exactly. The +1
        // shift alone does not swap anything: a player owning both an even
        // and an odd cycle just changes its favorite, and stuck vertices keep
        // their loser regardless of priorities.
        const WinningRegions relabeled = solve(swap_owners(shift_priorities(g, 1)));
        CHECK(relabeled.region0 == base.region1);
        CHECK(relabeled.region1 == base.region0);
    }
}

TEST_CASE("min-parity solving by reflection") {
    // Single odd self-loop: minimum 1 is odd, Player 1 wins under min-parity.
    const ParityGame odd_loop = ParityGame::make({{"v", 0, 1}}, {{0, 0}});
    CHECK(solve_min_parity(odd_loop).region1 == std::set<int>{0});

    // Cycle with priorities {1,2}: min 1 odd, Player 1 wins under min-parity
    // although max-parity hands it to Player 0.
    const ParityGame cycle = ParityGame::make({{"a", 0, 1}, {"b", 1, 2}}, {{0, 1}, {1, 0}});
    CHECK(solve(cycle).region0 == std::set<int>{0, 1});
    CHECK(solve_min_parity(cycle).region1 == std::set<int>{0, 1});

    // Brute-force cross-check via reflected games.
    std::mt19937 rng(20240904);
    for (int i = 0; i < 40; ++i) {
        const ParityGame g = testutil::random_game(rng, 7, 4, 3, 0.1);
        int top = 0;
        for (int v = 0; v < g.vertex_count(); ++v) top = std::max(top, g.vertex(v).priority);
        const int ceiling = top % 2 == 0 ? top : top + 1;
        const ParityGame reflected = [&] {
            std::vector<ParityGame::Vertex> vertices;
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v < g.vertex_count(); ++v) {
                ParityGame::Vertex vertex = g.vertex(v);
                vertex.priority = ceiling - vertex.priority;
                vertices.push_back(std::move(vertex));
                for (const int w : g.successors(v)) edges.emplace_back(v, w);
            }
            return ParityGame::make(std::move(vertices), edges);
        }();
        const WinningRegions via_reflection = brute_force_solve(reflected);
        const WinningRegions direct = solve_min_parity(g);
        CHECK(direct.region0 == via_reflection.region0);
        CHECK(direct.region1 == via_reflection.region1);
    }
}

TEST_CASE("witnesses verify on games beyond brute-force reach") {
    std::mt19937 rng(20240909);
    for (int i = 0; i < 60; ++i) {
        const int n = 10 + static_cast<int>(rng() % 41);
        std::vector<ParityGame::Vertex> vertices;
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < n; ++v) {
            vertices.push_back({"v" + std::to_string(v), static_cast<int>(rng() % 2),
                                static_cast<int>(rng() % 9)});
            if (rng() % 10 == 0) continue;
            const int degree = 1 + static_cast<int>(rng() % 4);
            for (int k = 0; k < degree; ++k) edges.emplace_back(v, static_cast<int>(rng() % n));
        }
        const ParityGame g = ParityGame::make(std::move(vertices), edges);
        const WinningRegions r = solve(g);
        CHECK(static_cast<int>(r.region0.size() + r.region1.size()) == g.vertex_count());
        CHECK(verify_strategy(g, r.strategy0, r.region0));
        CHECK(verify_strategy(g, r.strategy1, r.region1));
    }
}

TEST_CASE("solver output is deterministic") {
    std::mt19937 rng(20240905);
    const ParityGame g = testutil::random_game(rng, 8, 4, 3, 0.15);
    const WinningRegions a = solve(g);
    const WinningRegions b = solve(g);
    CHECK(a.region0 == b.region0);
    CHECK(a.strategy0.moves == b.strategy0.moves);
    CHECK(a.strategy1.moves == b.strategy1.moves);
}

TEST_CASE("strategies stay within reach of their regions") {
    std::mt19937 rng(20240906);
    for (int i = 0; i < 50; ++i) {
        const ParityGame g = testutil::random_game(rng, 8, 4, 3, 0.2);
        const WinningRegions r = solve(g);
        for (const auto& [v, w] : r.strategy0.moves) {
            CHECK(r.region0.count(v) > 0);
            CHECK(g.has_edge(v, w));
        }
        for (const auto& [v, w] : r.strategy1.moves) {
            CHECK(r.region1.count(v) > 0);
            CHECK(g.has_edge(v, w));
        }
    }
}
