#include "mucalc/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "mucalc/detail/scc.hpp"

namespace mucalc {

namespace {

std::vector<std::vector<int>> predecessor_lists(const ParityGame& g) {
    std::vector<std::vector<int>> pred(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const int w : g.successors(v)) pred[w].push_back(v);
    }
    return pred;
}

// Attractor of `player` to `targets` within the vertex set `in`. Vertices of
// the opponent whose in-subgame successors all lie in the attractor join it,
// so an opponent vertex that is stuck inside `in` joins as soon as it is
// seeded or reached. For every added vertex of `player` a move witnessing the
// attraction is recorded: the smallest successor already inside.
std::vector<char> attractor(const ParityGame& g, const std::vector<std::vector<int>>& pred,
                            const std::vector<char>& in, const std::vector<int>& targets,
                            int player, std::map<int, int>& moves) {
    std::vector<char> attr(g.vertex_count(), 0);
    std::vector<int> pending_count(g.vertex_count(), 0);
    std::vector<int> queue;

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!in[v]) continue;
        for (const int w : g.successors(v)) {
            if (in[w]) ++pending_count[v];
        }
    }
    for (const int t : targets) {
        if (in[t] && !attr[t]) {
            attr[t] = 1;
            queue.push_back(t);
        }
    }

    // The recorded move must target a vertex attracted strictly earlier, so
    // it is chosen before the vertex itself is marked; this is what makes
    // every conforming play descend toward the target set.
    const auto smallest_attracted_successor = [&](int v) {
        for (const int w : g.successors(v)) {
            if (in[w] && attr[w]) return w;
        }
        throw std::logic_error("attractor bookkeeping broken");
    };

    for (size_t next = 0; next < queue.size(); ++next) {
        const int v = queue[next];
        for (const int u : pred[v]) {
            if (!in[u] || attr[u]) continue;
            if (g.vertex(u).owner == player) {
                moves[u] = smallest_attracted_successor(u);
                attr[u] = 1;
                queue.push_back(u);
            } else if (--pending_count[u] == 0) {
                attr[u] = 1;
                queue.push_back(u);
            }
        }
    }
    return attr;
}

std::vector<int> stuck_vertices(const ParityGame& g, const std::vector<char>& in, int owner) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!in[v] || g.vertex(v).owner != owner) continue;
        bool has_move = false;
        for (const int w : g.successors(v)) {
            if (in[w]) {
                has_move = true;
                break;
            }
        }
        if (!has_move) out.push_back(v);
    }
    return out;
}

struct ZielonkaResult {
    std::vector<char> region0;
    std::vector<char> region1;
    std::map<int, int> moves0;
    std::map<int, int> moves1;

    std::vector<char>& region(int player) { return player == 0 ? region0 : region1; }
    std::map<int, int>& moves(int player) { return player == 0 ? moves0 : moves1; }
};

// Classic recursion; expects `in` to be total (every vertex has a successor
// inside), which the dead-end preprocessing in solve() establishes and the
// attractor removals preserve.
ZielonkaResult zielonka(const ParityGame& g, const std::vector<std::vector<int>>& pred,
                        const std::vector<char>& in, int count) {
    const int n = g.vertex_count();
    ZielonkaResult result{std::vector<char>(n, 0), std::vector<char>(n, 0), {}, {}};
    if (count == 0) return result;

    int top = -1;
    for (int v = 0; v < n; ++v) {
        if (in[v]) top = std::max(top, g.vertex(v).priority);
    }
    const int player = top % 2 == 0 ? 0 : 1;
    const int opponent = 1 - player;

    std::vector<int> tops;
    for (int v = 0; v < n; ++v) {
        if (in[v] && g.vertex(v).priority == top) tops.push_back(v);
    }

    std::map<int, int> attract_moves;
    const std::vector<char> attracted = attractor(g, pred, in, tops, player, attract_moves);

    std::vector<char> rest = in;
    int rest_count = count;
    for (int v = 0; v < n; ++v) {
        if (attracted[v]) {
            rest[v] = 0;
            --rest_count;
        }
    }

    ZielonkaResult sub = zielonka(g, pred, rest, rest_count);
    const bool opponent_empty =
        std::none_of(sub.region(opponent).begin(), sub.region(opponent).end(),
                     [](char c) { return c != 0; });

    if (opponent_empty) {
        // The whole subgame is won by `player`: attracted vertices move toward
        // the top-priority set, top vertices take any move that stays inside.
        result.region(player) = in;
        result.moves(player) = std::move(sub.moves(player));
        result.moves(player).insert(attract_moves.begin(), attract_moves.end());
        for (const int v : tops) {
            if (g.vertex(v).owner != player) continue;
            for (const int w : g.successors(v)) {
                if (in[w]) {
                    result.moves(player).emplace(v, w);
                    break;
                }
            }
        }
        return result;
    }

    std::map<int, int> escape_moves;
    std::vector<int> opponent_region;
    for (int v = 0; v < n; ++v) {
        if (sub.region(opponent)[v]) opponent_region.push_back(v);
    }
    const std::vector<char> attracted_opp =
        attractor(g, pred, in, opponent_region, opponent, escape_moves);

    std::vector<char> rest2 = in;
    int rest2_count = count;
    for (int v = 0; v < n; ++v) {
        if (attracted_opp[v]) {
            rest2[v] = 0;
            --rest2_count;
        }
    }

    ZielonkaResult sub2 = zielonka(g, pred, rest2, rest2_count);
    result.region(player) = std::move(sub2.region(player));
    result.moves(player) = std::move(sub2.moves(player));
    result.region(opponent) = std::move(sub2.region(opponent));
    for (int v = 0; v < n; ++v) {
        if (attracted_opp[v]) result.region(opponent)[v] = 1;
    }
    result.moves(opponent) = std::move(sub2.moves(opponent));
    // Inside the first subcall's opponent region the subcall strategy is kept;
    // the attractor supplies moves on the approach.
    for (const auto& [v, w] : sub.moves(opponent)) {
        if (sub.region(opponent)[v]) result.moves(opponent).emplace(v, w);
    }
    result.moves(opponent).insert(escape_moves.begin(), escape_moves.end());
    return result;
}

std::set<int> to_set(const std::vector<char>& mask) {
    std::set<int> out;
    for (int v = 0; v < static_cast<int>(mask.size()); ++v) {
        if (mask[v]) out.insert(v);
    }
    return out;
}

}  // namespace

WinningRegions solve(const ParityGame& g) {
    const int n = g.vertex_count();
    const auto pred = predecessor_lists(g);

    std::vector<char> in(n, 1);
    int count = n;
    WinningRegions out;
    out.strategy0.owner = 0;
    out.strategy1.owner = 1;

    // Peel off the regions won by getting the opponent stuck. One round per
    // player suffices: the attractor removals cannot create new dead-ends.
    for (const int player : {0, 1}) {
        std::map<int, int> moves;
        const std::vector<int> stuck = stuck_vertices(g, in, 1 - player);
        const std::vector<char> won = attractor(g, pred, in, stuck, player, moves);
        auto& region = player == 0 ? out.region0 : out.region1;
        auto& strategy = player == 0 ? out.strategy0 : out.strategy1;
        for (int v = 0; v < n; ++v) {
            if (won[v]) {
                region.insert(v);
                in[v] = 0;
                --count;
            }
        }
        strategy.moves.insert(moves.begin(), moves.end());
    }

    ZielonkaResult core = zielonka(g, pred, in, count);
    for (int v = 0; v < n; ++v) {
        if (core.region0[v]) out.region0.insert(v);
        if (core.region1[v]) out.region1.insert(v);
    }
    out.strategy0.moves.insert(core.moves0.begin(), core.moves0.end());
    out.strategy1.moves.insert(core.moves1.begin(), core.moves1.end());
    return out;
}

// ---------------------------------------------------------------------------
// Strategy verification
// ---------------------------------------------------------------------------

namespace {

// Restriction of the game to `claimed` with the strategy owner's moves fixed.
// Vertices outside `claimed` keep empty lists.
std::vector<std::vector<int>> restricted_graph(const ParityGame& g, const Strategy& s,
                                               const std::set<int>& claimed) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const int v : claimed) {
        if (g.vertex(v).owner == s.owner) {
            if (const auto it = s.moves.find(v); it != s.moves.end()) adj[v].push_back(it->second);
        } else {
            adj[v] = g.successors(v);
        }
    }
    return adj;
}

// True iff the subgraph contains a cycle whose maximum priority has the
// opponent's parity. Checked per bad priority p: any cycle-bearing strongly
// connected component of the sub-subgraph of priorities <= p that touches a
// priority-p vertex witnesses a bad cycle with maximum exactly p.
bool has_bad_cycle(const ParityGame& g, const std::vector<std::vector<int>>& adj,
                   const std::vector<char>& live, int owner) {
    std::set<int> priorities;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (live[v]) priorities.insert(g.vertex(v).priority);
    }
    for (const int p : priorities) {
        const bool bad = owner == 0 ? p % 2 == 1 : p % 2 == 0;
        if (!bad) continue;
        std::vector<std::vector<int>> sub(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!live[v] || g.vertex(v).priority > p) continue;
            for (const int w : adj[v]) {
                if (live[w] && g.vertex(w).priority <= p) sub[v].push_back(w);
            }
        }
        for (const std::vector<int>& component : detail::strongly_connected_components(sub)) {
            bool cyclic = component.size() > 1;
            if (!cyclic) {
                const int v = component.front();
                cyclic = live[v] && std::find(sub[v].begin(), sub[v].end(), v) != sub[v].end();
            }
            if (!cyclic) continue;
            for (const int v : component) {
                if (g.vertex(v).priority == p) return true;
            }
        }
    }
    return false;
}

}  // namespace

bool verify_strategy(const ParityGame& g, const Strategy& s, const std::set<int>& claimed) {
    for (const auto& [v, w] : s.moves) {
        if (v < 0 || v >= g.vertex_count() || !g.has_edge(v, w)) {
            throw std::invalid_argument("strategy references a non-edge");
        }
    }
    for (const int v : claimed) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (g.vertex(v).owner == s.owner) {
            if (g.successors(v).empty()) return false;  // own dead-end loses
            const auto it = s.moves.find(v);
            if (it == s.moves.end()) return false;
            if (claimed.count(it->second) == 0) return false;
        } else {
            for (const int w : g.successors(v)) {
                if (claimed.count(w) == 0) return false;  // opponent escapes
            }
        }
    }

    const auto adj = restricted_graph(g, s, claimed);
    std::vector<char> live(g.vertex_count(), 0);
    for (const int v : claimed) live[v] = 1;
    return !has_bad_cycle(g, adj, live, s.owner);
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

namespace {

// Vertices from which every maximal path under the fixed strategy is a win
// for `owner`: no reachable own dead-end and no reachable cycle of the
// opponent's parity.
std::vector<char> winning_starts(const ParityGame& g, const std::vector<std::vector<int>>& adj,
                                 int owner) {
    const int n = g.vertex_count();
    std::vector<char> wins(n, 0);
    for (int start = 0; start < n; ++start) {
        std::vector<char> reach(n, 0);
        std::vector<int> queue{start};
        reach[start] = 1;
        for (size_t i = 0; i < queue.size(); ++i) {
            for (const int w : adj[queue[i]]) {
                if (!reach[w]) {
                    reach[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        bool ok = true;
        for (const int v : queue) {
            if (adj[v].empty() && g.vertex(v).owner == owner) {
                ok = false;  // reachable own dead-end loses
                break;
            }
        }
        if (ok && has_bad_cycle(g, adj, reach, owner)) ok = false;
        wins[start] = ok ? 1 : 0;
    }
    return wins;
}

// Enumerates all memoryless strategies of `owner`, accumulating per-vertex
// wins, and keeps one strategy that wins from everything the player can win
// from at all (positional determinacy guarantees it exists).
std::pair<std::set<int>, Strategy> enumerate_player(const ParityGame& g, int owner) {
    const int n = g.vertex_count();
    std::vector<int> own;
    for (int v = 0; v < n; ++v) {
        if (g.vertex(v).owner == owner && !g.successors(v).empty()) own.push_back(v);
    }

    std::vector<size_t> choice(own.size(), 0);
    std::vector<char> best(n, 0);
    Strategy witness{owner, {}};
    int witness_won = -1;

    while (true) {
        std::vector<std::vector<int>> adj(n);
        Strategy current{owner, {}};
        for (int v = 0; v < n; ++v) {
            if (g.vertex(v).owner != owner) {
                adj[v] = g.successors(v);
            }
        }
        for (size_t i = 0; i < own.size(); ++i) {
            const int v = own[i];
            const int w = g.successors(v)[choice[i]];
            adj[v].push_back(w);
            current.moves[v] = w;
        }

        const std::vector<char> wins = winning_starts(g, adj, owner);
        const int won = static_cast<int>(std::count(wins.begin(), wins.end(), 1));
        for (int v = 0; v < n; ++v) {
            if (wins[v]) best[v] = 1;
        }
        if (won > witness_won) {
            witness_won = won;
            witness = std::move(current);
        }

        // odometer over move choices
        size_t i = 0;
        for (; i < own.size(); ++i) {
            if (++choice[i] < g.successors(own[i]).size()) break;
            choice[i] = 0;
        }
        if (i == own.size()) break;
    }
    // Positional determinacy: a single strategy wins from the whole region.
    if (witness_won != static_cast<int>(std::count(best.begin(), best.end(), 1))) {
        throw std::logic_error("no single strategy wins the whole brute-force region");
    }
    return {to_set(best), std::move(witness)};
}

}  // namespace

WinningRegions brute_force_solve(const ParityGame& g) {
    if (g.vertex_count() > 12) {
        throw std::invalid_argument("brute-force solving is limited to 12 vertices");
    }
    auto [region0, strategy0] = enumerate_player(g, 0);
    auto [region1, strategy1] = enumerate_player(g, 1);

    WinningRegions out;
    out.region0 = std::move(region0);
    out.region1 = std::move(region1);
    out.strategy0 = std::move(strategy0);
    out.strategy1 = std::move(strategy1);
    return out;
}

WinningRegions solve_min_parity(const ParityGame& g) {
    int top = 0;
    for (int v = 0; v < g.vertex_count(); ++v) top = std::max(top, g.vertex(v).priority);
    const int ceiling = top % 2 == 0 ? top : top + 1;

    std::vector<ParityGame::Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.vertex_count(); ++v) {
        ParityGame::Vertex vertex = g.vertex(v);
        vertex.priority = ceiling - vertex.priority;
        vertices.push_back(std::move(vertex));
        for (const int w : g.successors(v)) edges.emplace_back(v, w);
    }
    return solve(ParityGame::make(std::move(vertices), edges, g.initial()));
}

}  // namespace mucalc
