#pragma once

#include <functional>
#include <map>
#include <string>

#include "mucalc/formula.hpp"
#include "mucalc/kripke.hpp"

namespace mucalc {

/// Interpretation of names as state sets. Names absent from the valuation
/// fall back to the structure's labeling (a proposition holds at the states
/// that carry it). Fixed-point evaluation threads variable bindings through
/// this map instead of rebuilding relabeled structures.
using Valuation = std::map<std::string, StateSet>;

struct EvalStats {
    int fixpoints = 0;  ///< number of fixed-point computations performed
    int max_chain = 0;  ///< longest approximation chain seen (strict steps)
};

/// Denotation of `f` over `k`. Least fixed points iterate the ascending chain
/// from the empty set, greatest fixed points the descending chain from the
/// full state set; both stop at the first repeat, which is reached within
/// |S| strict steps.
StateSet eval(const Formula& f, const KripkeStructure& k, const Valuation& v = {},
              EvalStats* stats = nullptr);

/// True iff the initial state lies in the denotation. `f` is expected to be
/// well-named and closed up to labeled propositions.
bool models(const PointedSystem& p, const Formula& f, EvalStats* stats = nullptr);

struct FixpointResult {
    StateSet value;
    int chain_length = 0;  ///< number of strict steps until stabilization
};

/// Least fixed point of a monotone set transformer on the powerset of the
/// structure's states, by chain iteration from the empty set. Throws
/// std::logic_error if the chain fails to stabilize within |S| strict steps,
/// which indicates a non-monotone transformer.
FixpointResult lfp_iterate(const std::function<StateSet(const StateSet&)>& step,
                           const KripkeStructure& k);

/// Greatest fixed point, by chain iteration from the full state set.
FixpointResult gfp_iterate(const std::function<StateSet(const StateSet&)>& step,
                           const KripkeStructure& k);

}  // namespace mucalc
