#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mucalc {

/// Transition condition of an alternating tree automaton. Conjunction and
/// disjunction apply to state pairs only, modalities to a single state.
struct TransitionCondition {
    enum class Kind { Const0, Const1, Prop, NegProp, State, BoxState, DiamondState, AndStates, OrStates };

    Kind kind = Kind::Const0;
    std::string prop;  ///< Prop/NegProp
    std::string q1;    ///< State/BoxState/DiamondState/AndStates/OrStates
    std::string q2;    ///< AndStates/OrStates

    static TransitionCondition const0() { return {Kind::Const0, "", "", ""}; }
    static TransitionCondition const1() { return {Kind::Const1, "", "", ""}; }
    static TransitionCondition prop_holds(std::string p) { return {Kind::Prop, std::move(p), "", ""}; }
    static TransitionCondition prop_fails(std::string p) { return {Kind::NegProp, std::move(p), "", ""}; }
    static TransitionCondition state(std::string q) { return {Kind::State, "", std::move(q), ""}; }
    static TransitionCondition box(std::string q) { return {Kind::BoxState, "", std::move(q), ""}; }
    static TransitionCondition diamond(std::string q) { return {Kind::DiamondState, "", std::move(q), ""}; }
    static TransitionCondition conj(std::string q1, std::string q2) {
        return {Kind::AndStates, "", std::move(q1), std::move(q2)};
    }
    static TransitionCondition disj(std::string q1, std::string q2) {
        return {Kind::OrStates, "", std::move(q1), std::move(q2)};
    }

    /// States mentioned by the condition, in condition order.
    std::vector<std::string> mentioned_states() const;

    bool operator==(const TransitionCondition&) const = default;
};

/// Alternating tree automaton: states in a fixed declaration order, a total
/// transition function and a priority function. Immutable after make().
class Automaton {
public:
    /// Validates: non-empty state set, no duplicates, initial declared, delta
    /// total and mentioning declared states only, priorities non-negative.
    static Automaton make(std::vector<std::string> states, std::string initial,
                          std::map<std::string, TransitionCondition> delta,
                          std::map<std::string, int> priorities);

    const std::vector<std::string>& states() const { return states_; }
    int state_count() const { return static_cast<int>(states_.size()); }
    const std::string& initial() const { return initial_; }

    const TransitionCondition& delta(const std::string& q) const;
    int priority(const std::string& q) const;

    int index_of(const std::string& q) const;  ///< position in states()

    bool operator==(const Automaton&) const = default;

private:
    std::vector<std::string> states_;
    std::string initial_;
    std::vector<TransitionCondition> delta_;
    std::vector<int> priorities_;
    std::map<std::string, int> index_;
};

/// Adjacency over state positions: an edge q -> q' iff q' appears in delta(q).
std::vector<std::vector<int>> transition_graph(const Automaton& a);

/// Maximum, over the strongly connected components of the transition graph,
/// of the number of distinct priorities used in the component; 0 when no
/// component contains an edge. A single vertex without a self-loop does not
/// count as a cycle-bearing component.
int index(const Automaton& a);

/// Line-oriented dump ('#' starts a comment):
///   state <q> prio <n> delta <condition>
///   init <q>
/// with <condition> one of: 0 | 1 | p <name> | !p <name> | st <q> | box <q>
/// | dia <q> | and <q1> <q2> | or <q1> <q2>.
Automaton parse_automaton(std::string_view text);
std::string print_automaton(const Automaton& a);

}  // namespace mucalc
