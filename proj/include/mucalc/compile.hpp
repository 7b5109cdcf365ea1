#pragma once

#include "mucalc/automaton.hpp"
#include "mucalc/formula.hpp"

namespace mucalc {

/// Translates a well-named formula into an alternating tree automaton with
/// one state per subformula node, named "n<node-id>_<shorthand>".
///
/// Transitions follow the subformula structure; a bound-variable state maps
/// back to its binder's state, which is what closes the regeneration cycles.
///
/// Priorities: a binder whose subtree mentions no enclosing binder's
/// variable gets the depth-based value (odd 2*ceil(a/2)-1 for mu, even
/// 2*floor(a/2) for nu, depth a); a dependent binder takes the tightest
/// value allowed by the binders it can regenerate, staying equal for the
/// same class and one below for the opposite class. Non-binder states share
/// their innermost binder's priority, terminal states keep 0. Under this
/// assignment the maximum priority of every cycle sits on its outermost
/// regenerated binder with that binder's parity, and index() equals the
/// alternation depth.
///
/// Throws std::invalid_argument if `f` is not well-named.
Automaton compile(const Formula& f);

}  // namespace mucalc
