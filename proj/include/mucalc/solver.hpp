#pragma once

#include <map>
#include <set>

#include "mucalc/game.hpp"

namespace mucalc {

/// Memoryless strategy for one player: a move for every owned, non-dead-end
/// vertex inside the player's claimed region.
struct Strategy {
    int owner = 0;
    std::map<int, int> moves;
    bool operator==(const Strategy&) const = default;
};

/// The determined partition of the vertex set together with witness
/// strategies on the respective regions.
struct WinningRegions {
    std::set<int> region0;
    std::set<int> region1;
    Strategy strategy0;
    Strategy strategy1;
};

/// Exact winning regions and witness strategies of a max-parity game, by
/// recursive attractor decomposition. Dead-ends lose for their owner; the
/// stuck-win regions are peeled off before the recursion so that the
/// recursive core only ever sees total subgames. Deterministic: among equally
/// winning moves the smallest successor is chosen.
WinningRegions solve(const ParityGame& g);

/// Independent oracle: enumerates every memoryless strategy of a player and
/// marks a vertex as won if some strategy wins from it; the opponent's region
/// is the complement (positional determinacy). Both players are enumerated so
/// that the returned witnesses are genuine. Throws std::invalid_argument for
/// games with more than 12 vertices.
WinningRegions brute_force_solve(const ParityGame& g);

/// Checks that `s` wins everywhere on `claimed` under max-parity: no play
/// leaves the region, every owned vertex with successors has a move, no owned
/// dead-end exists, and every cycle of the restricted graph has the owner's
/// parity (even maximum for Player 0, odd for Player 1). Throws
/// std::invalid_argument if the strategy references a non-edge.
bool verify_strategy(const ParityGame& g, const Strategy& s, const std::set<int>& claimed);

/// Solves a min-parity game by reflecting priorities (p -> C - p with C the
/// maximum priority rounded up to even, so that the minimum of a play maps to
/// its maximum with the same parity) and running the max-parity solver. The
/// returned regions and strategies refer to the original game.
WinningRegions solve_min_parity(const ParityGame& g);

}  // namespace mucalc
