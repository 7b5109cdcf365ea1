#pragma once

#include <random>
#include <string>
#include <vector>

#include "mucalc/automaton.hpp"
#include "mucalc/formula.hpp"
#include "mucalc/game.hpp"
#include "mucalc/kripke.hpp"

namespace testutil {

struct FormulaGenOptions {
    int max_depth = 4;
    double binder_prob = 0.3;
    bool require_used_binders = true;  ///< inject the variable if a binder never uses it
    std::vector<std::string> props = {"p", "q"};
};

/// Random positive-normal-form formula; negation only over the proposition
/// pool, so binder positivity holds by construction.
mucalc::Formula random_formula(std::mt19937& rng, const FormulaGenOptions& opt);

/// Strictly alternating binder tower of the given height whose innermost body
/// mentions every bound variable; its alternation depth equals `levels`.
mucalc::Formula alternating_tower(std::mt19937& rng, int levels, bool start_mu,
                                  const std::vector<std::string>& props);

/// Longest chain of nested binders of alternating classes in which each
/// binder's variable occurs free in the subtree of the next (0 without
/// binders). The syntactic alternation depth can exceed this when an inner
/// alternation shares no variable with the binder above it.
int threaded_alternation(const mucalc::Formula& f);

/// Random well-named formula whose binders all use their variable and whose
/// alternations are variable-threaded, so the syntactic depth equals the
/// threaded depth. Used where compiled-automaton structure is compared
/// against the depth.
mucalc::Formula random_threaded_formula(std::mt19937& rng, const FormulaGenOptions& opt);

/// Random pointed system: up to `max_states` states, each ordered pair an
/// edge with a density drawn from [min_density, max_density], labels drawn
/// uniformly, random initial state.
mucalc::PointedSystem random_kripke(std::mt19937& rng, int max_states, double min_density,
                                    double max_density, const std::vector<std::string>& props);

/// Random parity game with priorities in [0, max_priority], out-degrees in
/// [1, max_degree] and a sprinkling of dead-ends.
mucalc::ParityGame random_game(std::mt19937& rng, int max_vertices, int max_priority,
                               int max_degree, double dead_end_prob);

/// Random automaton over states q0..qn-1 (for format round-trip tests).
mucalc::Automaton random_automaton(std::mt19937& rng, int max_states);

/// Seven-vertex arena with four Player-0 vertices (z1, z2, z5, z6) and three
/// Player-1 vertices (z0, z3, z4), priorities z2=1, z3=3, z4=2, z5=4, z6=2.
/// Returns the game and the positions of z0..z6 in order.
std::pair<mucalc::ParityGame, std::vector<int>> sample_arena();

/// States from which every path is finite, decided by transitive-closure
/// cycle detection (independent of the evaluator).
mucalc::StateSet finite_path_states(const mucalc::KripkeStructure& k);

}  // namespace testutil
