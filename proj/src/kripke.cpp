#include "mucalc/kripke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mucalc/parse_error.hpp"

namespace mucalc {

KripkeStructure KripkeStructure::make(std::vector<std::string> states,
                                      const std::vector<std::pair<std::string, std::string>>& transitions,
                                      const std::map<std::string, std::set<std::string>>& labels) {
    if (states.empty()) throw std::invalid_argument("a Kripke structure needs at least one state");
    std::sort(states.begin(), states.end());
    if (std::adjacent_find(states.begin(), states.end()) != states.end()) {
        throw std::invalid_argument("duplicate state id");
    }

    KripkeStructure k;
    k.states_ = std::move(states);
    const int n = k.state_count();
    k.labels_.resize(n);
    k.successors_.resize(n);
    k.predecessors_.resize(n);

    for (const auto& [state, props] : labels) {
        if (!k.has_state(state)) throw std::invalid_argument("label for undeclared state '" + state + "'");
        k.labels_[k.index_of(state)] = props;
    }
    for (const auto& [src, dst] : transitions) {
        if (!k.has_state(src)) throw std::invalid_argument("transition from undeclared state '" + src + "'");
        if (!k.has_state(dst)) throw std::invalid_argument("transition to undeclared state '" + dst + "'");
        k.successors_[k.index_of(src)].insert(dst);
        k.predecessors_[k.index_of(dst)].insert(src);
    }
    return k;
}

bool KripkeStructure::has_state(const std::string& s) const {
    return std::binary_search(states_.begin(), states_.end(), s);
}

int KripkeStructure::index_of(const std::string& s) const {
    const auto it = std::lower_bound(states_.begin(), states_.end(), s);
    if (it == states_.end() || *it != s) throw std::invalid_argument("unknown state '" + s + "'");
    return static_cast<int>(it - states_.begin());
}

const std::set<std::string>& KripkeStructure::labels(const std::string& s) const {
    return labels_[index_of(s)];
}

const StateSet& KripkeStructure::successors(const std::string& s) const {
    return successors_[index_of(s)];
}

const StateSet& KripkeStructure::predecessors(const std::string& s) const {
    return predecessors_[index_of(s)];
}

std::vector<std::pair<std::string, std::string>> KripkeStructure::transitions() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 0; i < state_count(); ++i) {
        for (const std::string& dst : successors_[i]) out.emplace_back(states_[i], dst);
    }
    return out;
}

PointedSystem PointedSystem::make(KripkeStructure structure, std::string initial) {
    if (!structure.has_state(initial)) {
        throw std::invalid_argument("initial state '" + initial + "' is not declared");
    }
    return PointedSystem{std::move(structure), std::move(initial)};
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> words;
    std::istringstream in(line);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

}  // namespace

PointedSystem parse_kripke(std::string_view text) {
    std::vector<std::string> states;
    std::map<std::string, std::set<std::string>> labels;
    std::vector<std::pair<std::string, std::string>> transitions;
    std::vector<int> transition_lines;
    std::string init;
    bool have_init = false;
    int init_line = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::vector<std::string> words = split_words(raw);
        if (words.empty()) continue;
        const std::string& head = words[0];
        if (head == "state") {
            if (words.size() < 2) throw ParseError("'state' needs an id", lineno, 1);
            const std::string& id = words[1];
            if (std::find(states.begin(), states.end(), id) != states.end()) {
                throw ParseError("duplicate state '" + id + "'", lineno, 1);
            }
            states.push_back(id);
            labels[id].insert(words.begin() + 2, words.end());
        } else if (head == "trans") {
            if (words.size() != 3) throw ParseError("'trans' needs a source and a destination", lineno, 1);
            transitions.emplace_back(words[1], words[2]);
            transition_lines.push_back(lineno);
        } else if (head == "init") {
            if (words.size() != 2) throw ParseError("'init' needs exactly one id", lineno, 1);
            if (have_init) throw ParseError("duplicate 'init' line", lineno, 1);
            init = words[1];
            have_init = true;
            init_line = lineno;
        } else {
            throw ParseError("unknown directive '" + head + "'", lineno, 1);
        }
    }

    if (!have_init) throw ParseError("missing 'init' line", lineno == 0 ? 1 : lineno, 1);
    if (states.empty()) throw ParseError("no 'state' lines", lineno, 1);
    const auto declared = [&](const std::string& id) {
        return std::find(states.begin(), states.end(), id) != states.end();
    };
    for (size_t i = 0; i < transitions.size(); ++i) {
        if (!declared(transitions[i].first) || !declared(transitions[i].second)) {
            throw ParseError("transition endpoint not declared as a state", transition_lines[i], 1);
        }
    }
    if (!declared(init)) throw ParseError("initial state '" + init + "' is not declared", init_line, 1);
    return PointedSystem::make(KripkeStructure::make(std::move(states), transitions, labels), init);
}

std::string print_kripke(const PointedSystem& p) {
    std::ostringstream out;
    for (const std::string& s : p.structure.states()) {
        out << "state " << s;
        for (const std::string& prop : p.structure.labels(s)) out << ' ' << prop;
        out << '\n';
    }
    for (const auto& [src, dst] : p.structure.transitions()) {
        out << "trans " << src << ' ' << dst << '\n';
    }
    out << "init " << p.initial << '\n';
    return out.str();
}

}  // namespace mucalc
