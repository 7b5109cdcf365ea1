#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mucalc/formula.hpp"
#include "mucalc/kripke.hpp"
#include "mucalc/solver.hpp"

namespace mucalc {

enum class CheckMethod { Semantic, Game };

/// Result of one model-checking run. The two methods agree on every input;
/// the cross-check path verifies exactly that.
struct CheckReport {
    bool verdict = false;
    CheckMethod method = CheckMethod::Semantic;
    int game_vertices = 0;  ///< game method
    int game_edges = 0;     ///< game method
    int fixpoints = 0;      ///< semantic method: fixed points computed
    int max_chain = 0;      ///< semantic method: longest approximation chain
    std::optional<Strategy> witness;  ///< Player-0 strategy when the game method says true
};

/// Direct evaluation: verdict = initial state lies in the denotation.
/// The formula is well-named internally before evaluation.
CheckReport check_semantic(const PointedSystem& p, const Formula& f);

/// Compile to an alternating automaton, build the acceptance game, solve it:
/// verdict = the initial vertex is won by Player 0.
CheckReport check_game(const PointedSystem& p, const Formula& f);

/// Enumerates pointed systems with at most `max_states` states over the free
/// atoms of `f` (initial state fixed to the first state, which every model is
/// isomorphic to) and returns the first model, or nothing if none exists
/// within the bound. Absence means only "no model within the bound".
/// Throws std::invalid_argument if max_states < 1.
std::optional<PointedSystem> sat_bounded(const Formula& f, int max_states);

/// Command-line frontend; see README for the subcommands. Returns the
/// process exit status (0 verdict true / success, 1 verdict false / no
/// model, 2 usage or input error) and writes the machine-readable verdict to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mucalc
