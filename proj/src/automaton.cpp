#include "mucalc/automaton.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mucalc/detail/scc.hpp"
#include "mucalc/parse_error.hpp"

namespace mucalc {

std::vector<std::string> TransitionCondition::mentioned_states() const {
    switch (kind) {
        case Kind::Const0:
        case Kind::Const1:
        case Kind::Prop:
        case Kind::NegProp:
            return {};
        case Kind::State:
        case Kind::BoxState:
        case Kind::DiamondState:
            return {q1};
        case Kind::AndStates:
        case Kind::OrStates:
            return {q1, q2};
    }
    return {};
}

Automaton Automaton::make(std::vector<std::string> states, std::string initial,
                          std::map<std::string, TransitionCondition> delta,
                          std::map<std::string, int> priorities) {
    if (states.empty()) throw std::invalid_argument("an automaton needs at least one state");

    Automaton a;
    a.states_ = std::move(states);
    for (int i = 0; i < a.state_count(); ++i) {
        if (!a.index_.emplace(a.states_[i], i).second) {
            throw std::invalid_argument("duplicate automaton state '" + a.states_[i] + "'");
        }
    }
    if (a.index_.find(initial) == a.index_.end()) {
        throw std::invalid_argument("initial state '" + initial + "' is not declared");
    }
    a.initial_ = std::move(initial);

    a.delta_.resize(a.state_count());
    a.priorities_.assign(a.state_count(), 0);
    for (const std::string& q : a.states_) {
        const auto d = delta.find(q);
        if (d == delta.end()) throw std::invalid_argument("no transition condition for state '" + q + "'");
        for (const std::string& mentioned : d->second.mentioned_states()) {
            if (a.index_.find(mentioned) == a.index_.end()) {
                throw std::invalid_argument("condition of '" + q + "' mentions undeclared state '" +
                                            mentioned + "'");
            }
        }
        a.delta_[a.index_.at(q)] = d->second;
    }
    for (const auto& [q, prio] : priorities) {
        const auto it = a.index_.find(q);
        if (it == a.index_.end()) throw std::invalid_argument("priority for undeclared state '" + q + "'");
        if (prio < 0) throw std::invalid_argument("negative priority for state '" + q + "'");
        a.priorities_[it->second] = prio;
    }
    return a;
}

const TransitionCondition& Automaton::delta(const std::string& q) const {
    return delta_[index_of(q)];
}

int Automaton::priority(const std::string& q) const { return priorities_[index_of(q)]; }

int Automaton::index_of(const std::string& q) const {
    const auto it = index_.find(q);
    if (it == index_.end()) throw std::invalid_argument("unknown automaton state '" + q + "'");
    return it->second;
}

std::vector<std::vector<int>> transition_graph(const Automaton& a) {
    std::vector<std::vector<int>> adjacency(a.state_count());
    for (int i = 0; i < a.state_count(); ++i) {
        for (const std::string& target : a.delta(a.states()[i]).mentioned_states()) {
            adjacency[i].push_back(a.index_of(target));
        }
    }
    return adjacency;
}

int index(const Automaton& a) {
    const auto adjacency = transition_graph(a);
    int best = 0;
    for (const std::vector<int>& component : detail::strongly_connected_components(adjacency)) {
        bool has_edge = component.size() > 1;
        if (!has_edge) {
            const int v = component.front();
            has_edge = std::find(adjacency[v].begin(), adjacency[v].end(), v) != adjacency[v].end();
        }
        if (!has_edge) continue;
        std::set<int> used;
        for (const int v : component) used.insert(a.priority(a.states()[v]));
        best = std::max(best, static_cast<int>(used.size()));
    }
    return best;
}

namespace {

TransitionCondition parse_condition(const std::vector<std::string>& words, size_t at, int lineno) {
    const auto need = [&](size_t count) {
        if (words.size() != at + 1 + count) {
            throw ParseError("wrong number of arguments for condition '" + words[at] + "'", lineno, 1);
        }
    };
    const std::string& tag = words[at];
    if (tag == "0") { need(0); return TransitionCondition::const0(); }
    if (tag == "1") { need(0); return TransitionCondition::const1(); }
    if (tag == "p") { need(1); return TransitionCondition::prop_holds(words[at + 1]); }
    if (tag == "!p") { need(1); return TransitionCondition::prop_fails(words[at + 1]); }
    if (tag == "st") { need(1); return TransitionCondition::state(words[at + 1]); }
    if (tag == "box") { need(1); return TransitionCondition::box(words[at + 1]); }
    if (tag == "dia") { need(1); return TransitionCondition::diamond(words[at + 1]); }
    if (tag == "and") { need(2); return TransitionCondition::conj(words[at + 1], words[at + 2]); }
    if (tag == "or") { need(2); return TransitionCondition::disj(words[at + 1], words[at + 2]); }
    throw ParseError("unknown condition '" + tag + "'", lineno, 1);
}

std::string condition_text(const TransitionCondition& c) {
    using Kind = TransitionCondition::Kind;
    switch (c.kind) {
        case Kind::Const0: return "0";
        case Kind::Const1: return "1";
        case Kind::Prop: return "p " + c.prop;
        case Kind::NegProp: return "!p " + c.prop;
        case Kind::State: return "st " + c.q1;
        case Kind::BoxState: return "box " + c.q1;
        case Kind::DiamondState: return "dia " + c.q1;
        case Kind::AndStates: return "and " + c.q1 + " " + c.q2;
        case Kind::OrStates: return "or " + c.q1 + " " + c.q2;
    }
    return "0";
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
    std::vector<std::string> states;
    std::map<std::string, TransitionCondition> delta;
    std::map<std::string, int> priorities;
    std::string initial;
    bool have_init = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    int last_line = 1;
    while (std::getline(in, raw)) {
        ++lineno;
        last_line = lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::vector<std::string> words;
        {
            std::istringstream ws(raw);
            std::string w;
            while (ws >> w) words.push_back(w);
        }
        if (words.empty()) continue;
        if (words[0] == "state") {
            if (words.size() < 5 || words[2] != "prio" || words[4] != "delta") {
                throw ParseError("expected 'state <q> prio <n> delta <condition>'", lineno, 1);
            }
            const std::string& q = words[1];
            if (delta.count(q) > 0) throw ParseError("duplicate state '" + q + "'", lineno, 1);
            int prio = 0;
            try {
                prio = std::stoi(words[3]);
            } catch (const std::exception&) {
                throw ParseError("priority must be a natural number", lineno, 1);
            }
            if (prio < 0) throw ParseError("priority must be a natural number", lineno, 1);
            states.push_back(q);
            priorities[q] = prio;
            delta[q] = parse_condition(words, 5, lineno);
        } else if (words[0] == "init") {
            if (words.size() != 2) throw ParseError("'init' needs exactly one state", lineno, 1);
            if (have_init) throw ParseError("duplicate 'init' line", lineno, 1);
            initial = words[1];
            have_init = true;
        } else {
            throw ParseError("unknown directive '" + words[0] + "'", lineno, 1);
        }
    }
    if (!have_init) throw ParseError("missing 'init' line", last_line, 1);
    try {
        return Automaton::make(std::move(states), std::move(initial), std::move(delta),
                               std::move(priorities));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), last_line, 1);
    }
}

std::string print_automaton(const Automaton& a) {
    std::ostringstream out;
    for (const std::string& q : a.states()) {
        out << "state " << q << " prio " << a.priority(q) << " delta " << condition_text(a.delta(q))
            << '\n';
    }
    out << "init " << a.initial() << '\n';
    return out.str();
}

}  // namespace mucalc
