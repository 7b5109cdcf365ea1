#include "mucalc/game.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mucalc/parse_error.hpp"

namespace mucalc {

ParityGame ParityGame::make(std::vector<Vertex> vertices,
                            const std::vector<std::pair<int, int>>& edges,
                            std::optional<int> initial) {
    ParityGame g;
    const int n = static_cast<int>(vertices.size());
    for (const Vertex& v : vertices) {
        if (v.owner != 0 && v.owner != 1) {
            throw std::invalid_argument("vertex owner must be 0 or 1");
        }
        if (v.priority < 0) throw std::invalid_argument("vertex priority must be non-negative");
    }
    g.vertices_ = std::move(vertices);
    g.successors_.resize(n);
    for (const auto& [from, to] : edges) {
        if (from < 0 || from >= n || to < 0 || to >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        g.successors_[from].push_back(to);
    }
    for (std::vector<int>& succ : g.successors_) {
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
    if (initial && (*initial < 0 || *initial >= n)) {
        throw std::invalid_argument("initial vertex out of range");
    }
    g.initial_ = initial;
    return g;
}

int ParityGame::edge_count() const {
    int total = 0;
    for (const std::vector<int>& succ : successors_) total += static_cast<int>(succ.size());
    return total;
}

bool ParityGame::has_edge(int from, int to) const {
    const std::vector<int>& succ = successors_[from];
    return std::binary_search(succ.begin(), succ.end(), to);
}

int ParityGame::find_vertex(const std::string& name) const {
    for (int v = 0; v < vertex_count(); ++v) {
        if (vertices_[v].name == name) return v;
    }
    return -1;
}

// ---------------------------------------------------------------------------
// Play evaluation
// ---------------------------------------------------------------------------

int evaluate_play(const ParityGame& g, const UltimatelyPeriodicPlay& play,
                  const WinningCondition& condition) {
    const auto check_vertex = [&](int v) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("play vertex out of range");
    };
    const auto check_edge = [&](int from, int to) {
        if (!g.has_edge(from, to)) {
            throw std::invalid_argument("play step " + g.vertex(from).name + " -> " +
                                        g.vertex(to).name + " is not an edge");
        }
    };
    for (const int v : play.prefix) check_vertex(v);
    for (const int v : play.cycle) check_vertex(v);
    for (size_t i = 1; i < play.prefix.size(); ++i) check_edge(play.prefix[i - 1], play.prefix[i]);

    if (play.cycle.empty()) {
        if (play.prefix.empty()) throw std::invalid_argument("empty play");
        const int last = play.prefix.back();
        if (!g.successors(last).empty()) {
            throw std::invalid_argument("finite play does not end in a dead-end");
        }
        return 1 - g.vertex(last).owner;  // the stuck player loses
    }

    if (!play.prefix.empty()) check_edge(play.prefix.back(), play.cycle.front());
    for (size_t i = 1; i < play.cycle.size(); ++i) check_edge(play.cycle[i - 1], play.cycle[i]);
    check_edge(play.cycle.back(), play.cycle.front());

    std::set<int> inf;  // priorities seen infinitely often = those on the cycle
    for (const int v : play.cycle) inf.insert(g.vertex(v).priority);

    switch (condition.kind) {
        case WinningCondition::Kind::MaxParity:
            return *inf.rbegin() % 2 == 0 ? 0 : 1;
        case WinningCondition::Kind::MinParity:
            return *inf.begin() % 2 == 0 ? 0 : 1;
        case WinningCondition::Kind::Muller:
            for (const std::set<int>& accepted : condition.accepting) {
                if (accepted == inf) return 0;
            }
            return 1;
    }
    throw std::logic_error("unreachable winning condition kind");
}

// ---------------------------------------------------------------------------
// Acceptance game
// ---------------------------------------------------------------------------

namespace {

struct PendingVertex {
    int owner;
    std::vector<std::pair<std::string, std::string>> successors;  // (q, s) pairs
};

// Owner and successor pairs of the game position (q, s), by the shape of
// delta(q). Literal positions are dead-ends whose owner encodes success:
// the player who would have to move loses by being stuck.
PendingVertex expand(const Automaton& a, const KripkeStructure& k, const std::string& q,
                     const std::string& s) {
    using Kind = TransitionCondition::Kind;
    const TransitionCondition& c = a.delta(q);
    switch (c.kind) {
        case Kind::Const0:
            return {0, {}};
        case Kind::Const1:
            return {1, {}};
        case Kind::Prop:
            return {k.labels(s).count(c.prop) > 0 ? 1 : 0, {}};
        case Kind::NegProp:
            return {k.labels(s).count(c.prop) > 0 ? 0 : 1, {}};
        case Kind::State:
            return {0, {{c.q1, s}}};
        case Kind::OrStates:
            return {0, {{c.q1, s}, {c.q2, s}}};
        case Kind::AndStates:
            return {1, {{c.q1, s}, {c.q2, s}}};
        case Kind::DiamondState: {
            PendingVertex out{0, {}};
            for (const std::string& succ : k.successors(s)) out.successors.emplace_back(c.q1, succ);
            return out;
        }
        case Kind::BoxState: {
            PendingVertex out{1, {}};
            for (const std::string& succ : k.successors(s)) out.successors.emplace_back(c.q1, succ);
            return out;
        }
    }
    throw std::logic_error("unreachable transition condition kind");
}

}  // namespace

ParityGame build_acceptance_game(const Automaton& a, const PointedSystem& p) {
    std::vector<ParityGame::Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<std::string, std::string>, int> seen;
    std::vector<std::pair<std::string, std::string>> queue;

    const auto intern = [&](const std::string& q, const std::string& s) {
        const auto key = std::make_pair(q, s);
        if (const auto it = seen.find(key); it != seen.end()) return it->second;
        const int id = static_cast<int>(vertices.size());
        seen.emplace(key, id);
        vertices.push_back(ParityGame::Vertex{"(" + q + "," + s + ")", 0, a.priority(q)});
        queue.push_back(key);
        return id;
    };

    intern(a.initial(), p.initial);
    for (size_t next = 0; next < queue.size(); ++next) {
        const auto [q, s] = queue[next];
        const int from = seen.at({q, s});
        const PendingVertex pending = expand(a, p.structure, q, s);
        vertices[from].owner = pending.owner;
        for (const auto& [q2, s2] : pending.successors) {
            edges.emplace_back(from, intern(q2, s2));
        }
    }
    return ParityGame::make(std::move(vertices), edges, 0);
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

std::string export_dot(const ParityGame& g) {
    std::ostringstream out;
    out << "digraph game {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        const ParityGame::Vertex& vertex = g.vertex(v);
        out << "  \"" << vertex.name << "\" [shape=" << (vertex.owner == 0 ? "ellipse" : "box")
            << ", label=\"" << vertex.name << "\\n" << vertex.priority << "\"";
        if (g.initial() && *g.initial() == v) out << ", peripheries=2";
        out << "];\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const int w : g.successors(v)) {
            out << "  \"" << g.vertex(v).name << "\" -> \"" << g.vertex(w).name << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// PGSolver format
// ---------------------------------------------------------------------------

namespace {

struct PgLine {
    int id;
    int priority;
    int owner;
    std::vector<int> successors;
    std::string name;
};

class PgLineParser {
public:
    PgLineParser(const std::string& line, int lineno) : line_(line), lineno_(lineno) {}

    PgLine run() {
        PgLine out;
        out.id = read_number("vertex id");
        out.priority = read_number("priority");
        out.owner = read_number("owner");
        if (out.owner != 0 && out.owner != 1) {
            throw ParseError("owner must be 0 or 1", lineno_, column());
        }
        skip_spaces();
        if (!at_end() && std::isdigit(peek())) {
            out.successors.push_back(read_number("successor"));
            skip_spaces();
            while (!at_end() && peek() == ',') {
                ++pos_;
                out.successors.push_back(read_number("successor"));
                skip_spaces();
            }
        }
        skip_spaces();
        if (!at_end() && peek() == '"') {
            ++pos_;
            const auto close = line_.find('"', pos_);
            if (close == std::string::npos) throw ParseError("unterminated name", lineno_, column());
            out.name = line_.substr(pos_, close - pos_);
            pos_ = close + 1;
        }
        skip_spaces();
        if (at_end() || peek() != ';') throw ParseError("expected ';'", lineno_, column());
        ++pos_;
        skip_spaces();
        if (!at_end()) throw ParseError("trailing characters after ';'", lineno_, column());
        return out;
    }

private:
    bool at_end() const { return pos_ >= line_.size(); }
    char peek() const { return line_[pos_]; }
    int column() const { return static_cast<int>(pos_) + 1; }

    void skip_spaces() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    int read_number(const char* what) {
        skip_spaces();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError(std::string("expected ") + what, lineno_, column());
        }
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1'000'000'000L) throw ParseError("number too large", lineno_, column());
            ++pos_;
        }
        return static_cast<int>(value);
    }

    const std::string& line_;
    size_t pos_ = 0;
    int lineno_;
};

}  // namespace

ParityGame parse_pgsolver(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;

    int max_id = -1;
    bool have_header = false;
    std::vector<PgLine> lines;

    while (std::getline(in, raw)) {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        while (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.find_first_not_of(" \t") == std::string::npos) continue;
        if (!have_header) {
            std::istringstream head(raw);
            std::string word, number, tail;
            head >> word >> number;
            if (word != "parity" || number.empty() || (head >> tail)) {
                throw ParseError("expected 'parity <max-vertex-id>;' header", lineno, 1);
            }
            if (number.back() != ';') throw ParseError("header must end with ';'", lineno, 1);
            number.pop_back();
            try {
                max_id = std::stoi(number);
            } catch (const std::exception&) {
                throw ParseError("malformed header", lineno, 1);
            }
            if (max_id < 0) throw ParseError("malformed header", lineno, 1);
            have_header = true;
            continue;
        }
        lines.push_back(PgLineParser(raw, lineno).run());
    }
    if (!have_header) throw ParseError("missing 'parity' header", lineno == 0 ? 1 : lineno, 1);
    if (lines.empty()) throw ParseError("no vertices", lineno, 1);

    std::sort(lines.begin(), lines.end(), [](const PgLine& a, const PgLine& b) { return a.id < b.id; });
    std::map<int, int> position;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (!position.emplace(lines[i].id, static_cast<int>(i)).second) {
            throw ParseError("duplicate vertex id " + std::to_string(lines[i].id), 1, 1);
        }
        if (lines[i].id > max_id) {
            throw ParseError("vertex id " + std::to_string(lines[i].id) + " exceeds header maximum", 1, 1);
        }
    }

    std::vector<ParityGame::Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < lines.size(); ++i) {
        vertices.push_back(ParityGame::Vertex{lines[i].name, lines[i].owner, lines[i].priority});
        for (const int succ : lines[i].successors) {
            const auto it = position.find(succ);
            if (it == position.end()) {
                throw ParseError("successor " + std::to_string(succ) + " is not a vertex", 1, 1);
            }
            edges.emplace_back(static_cast<int>(i), it->second);
        }
    }
    return ParityGame::make(std::move(vertices), edges);
}

std::string print_pgsolver(const ParityGame& g) {
    std::ostringstream out;
    out << "parity " << (g.vertex_count() - 1) << ";\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        const ParityGame::Vertex& vertex = g.vertex(v);
        out << v << ' ' << vertex.priority << ' ' << vertex.owner;
        const std::vector<int>& succ = g.successors(v);
        for (size_t i = 0; i < succ.size(); ++i) out << (i == 0 ? " " : ",") << succ[i];
        if (!vertex.name.empty()) out << " \"" << vertex.name << "\"";
        out << ";\n";
    }
    return out.str();
}

}  // namespace mucalc
