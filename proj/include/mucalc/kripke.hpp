#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mucalc {

using StateSet = std::set<std::string>;

/// Finite labeled transition system. States are kept in lexicographic order
/// so that every traversal, print and derived construction is deterministic.
/// Immutable after construction; dead-end states are allowed.
class KripkeStructure {
public:
    /// Validates: at least one state, no duplicate ids, transition endpoints
    /// and label keys declared. Throws std::invalid_argument otherwise.
    static KripkeStructure make(std::vector<std::string> states,
                                const std::vector<std::pair<std::string, std::string>>& transitions,
                                const std::map<std::string, std::set<std::string>>& labels);

    const std::vector<std::string>& states() const { return states_; }
    int state_count() const { return static_cast<int>(states_.size()); }
    bool has_state(const std::string& s) const;

    /// Propositions true at `s`. Throws std::invalid_argument on unknown state.
    const std::set<std::string>& labels(const std::string& s) const;

    /// {s' | (s,s') in R}. Throws std::invalid_argument on unknown state.
    const StateSet& successors(const std::string& s) const;
    /// {s' | (s',s) in R}.
    const StateSet& predecessors(const std::string& s) const;

    std::vector<std::pair<std::string, std::string>> transitions() const;

    bool operator==(const KripkeStructure&) const = default;

private:
    int index_of(const std::string& s) const;

    std::vector<std::string> states_;          // sorted
    std::vector<std::set<std::string>> labels_;
    std::vector<StateSet> successors_;
    std::vector<StateSet> predecessors_;
};

/// A Kripke structure with a distinguished initial state.
struct PointedSystem {
    KripkeStructure structure;
    std::string initial;

    /// Throws std::invalid_argument if `initial` is not a state.
    static PointedSystem make(KripkeStructure structure, std::string initial);

    bool operator==(const PointedSystem&) const = default;
};

/// Line-oriented text format ('#' starts a comment):
///   state <id> [<prop> ...]
///   trans <src> <dst>
///   init <id>              (exactly once)
/// Throws ParseError on malformed input, duplicate states, undeclared
/// transition endpoints, or a missing/duplicate init line.
PointedSystem parse_kripke(std::string_view text);

/// Prints the canonical form: states (with sorted props), transitions, init.
/// parse_kripke(print_kripke(p)) == p.
std::string print_kripke(const PointedSystem& p);

}  // namespace mucalc
