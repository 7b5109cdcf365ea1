#include "mucalc/formula.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mucalc/parse_error.hpp"

namespace mucalc {

Formula Formula::leaf(FormulaKind kind, std::string name) {
    Formula f;
    f.nodes_.push_back(Node{kind, std::move(name), -1, -1});
    return f;
}

Formula Formula::unary(FormulaKind kind, std::string name, const Formula& body) {
    Formula f;
    f.nodes_.reserve(1 + body.nodes_.size());
    f.nodes_.push_back(Node{kind, std::move(name), 1, -1});
    for (const Node& n : body.nodes_) {
        f.nodes_.push_back(Node{n.kind, n.name, n.left < 0 ? -1 : n.left + 1, n.right < 0 ? -1 : n.right + 1});
    }
    return f;
}

Formula Formula::binary(FormulaKind kind, const Formula& left, const Formula& right) {
    Formula f;
    const int left_size = static_cast<int>(left.nodes_.size());
    f.nodes_.reserve(1 + left.nodes_.size() + right.nodes_.size());
    f.nodes_.push_back(Node{kind, "", 1, 1 + left_size});
    for (const Node& n : left.nodes_) {
        f.nodes_.push_back(Node{n.kind, n.name, n.left < 0 ? -1 : n.left + 1, n.right < 0 ? -1 : n.right + 1});
    }
    const int offset = 1 + left_size;
    for (const Node& n : right.nodes_) {
        f.nodes_.push_back(
            Node{n.kind, n.name, n.left < 0 ? -1 : n.left + offset, n.right < 0 ? -1 : n.right + offset});
    }
    return f;
}

Formula Formula::bottom() { return leaf(FormulaKind::Bottom, ""); }
Formula Formula::top() { return leaf(FormulaKind::Top, ""); }
Formula Formula::atom(std::string name) { return leaf(FormulaKind::Atom, std::move(name)); }
Formula Formula::neg_atom(std::string name) { return leaf(FormulaKind::NegAtom, std::move(name)); }
Formula Formula::conj(const Formula& left, const Formula& right) {
    return binary(FormulaKind::And, left, right);
}
Formula Formula::disj(const Formula& left, const Formula& right) {
    return binary(FormulaKind::Or, left, right);
}
Formula Formula::box(const Formula& body) { return unary(FormulaKind::Box, "", body); }
Formula Formula::diamond(const Formula& body) { return unary(FormulaKind::Diamond, "", body); }

namespace {

// Scans a node array for NegAtom(var), skipping subtrees of binders that
// rebind var.
bool body_has_negated(const Formula& body, NodeId id, const std::string& var) {
    const FormulaKind k = body.kind(id);
    if (k == FormulaKind::NegAtom && body.name(id) == var) return true;
    if ((k == FormulaKind::Mu || k == FormulaKind::Nu) && body.name(id) == var) return false;
    if (body.left(id) >= 0 && body_has_negated(body, body.left(id), var)) return true;
    if (body.right(id) >= 0 && body_has_negated(body, body.right(id), var)) return true;
    return false;
}

}  // namespace

Formula Formula::mu(std::string var, const Formula& body) {
    if (body_has_negated(body, 0, var)) {
        throw std::invalid_argument("variable '" + var + "' occurs negated under its mu binder");
    }
    return unary(FormulaKind::Mu, std::move(var), body);
}

Formula Formula::nu(std::string var, const Formula& body) {
    if (body_has_negated(body, 0, var)) {
        throw std::invalid_argument("variable '" + var + "' occurs negated under its nu binder");
    }
    return unary(FormulaKind::Nu, std::move(var), body);
}

NodeId Formula::subtree_end(NodeId id) const {
    NodeId cur = id;
    while (true) {
        if (nodes_[cur].right >= 0) {
            cur = nodes_[cur].right;
        } else if (nodes_[cur].left >= 0) {
            cur = nodes_[cur].left;
        } else {
            return cur + 1;
        }
    }
}

Formula Formula::subtree(NodeId id) const {
    const NodeId end = subtree_end(id);
    Formula f;
    f.nodes_.reserve(end - id);
    for (NodeId i = id; i < end; ++i) {
        const Node& n = nodes_[i];
        f.nodes_.push_back(Node{n.kind, n.name, n.left < 0 ? -1 : n.left - id, n.right < 0 ? -1 : n.right - id});
    }
    return f;
}

namespace {

// Precedence levels used by the printer: binders are weakest, then '|',
// then '&', then the unary operators, then atoms.
int print_precedence(FormulaKind k) {
    switch (k) {
        case FormulaKind::Mu:
        case FormulaKind::Nu:
            return 0;
        case FormulaKind::Or:
            return 1;
        case FormulaKind::And:
            return 2;
        case FormulaKind::Box:
        case FormulaKind::Diamond:
            return 3;
        default:
            return 4;
    }
}

void print_node(const Formula& f, NodeId id, int required, std::string& out) {
    const FormulaKind k = f.kind(id);
    const bool parens = print_precedence(k) < required;
    if (parens) out += '(';
    switch (k) {
        case FormulaKind::Bottom:
            out += "false";
            break;
        case FormulaKind::Top:
            out += "true";
            break;
        case FormulaKind::Atom:
            out += f.name(id);
            break;
        case FormulaKind::NegAtom:
            out += '!';
            out += f.name(id);
            break;
        case FormulaKind::And:
            print_node(f, f.left(id), 2, out);
            out += " & ";
            print_node(f, f.right(id), 3, out);
            break;
        case FormulaKind::Or:
            print_node(f, f.left(id), 1, out);
            out += " | ";
            print_node(f, f.right(id), 2, out);
            break;
        case FormulaKind::Box:
            out += "[] ";
            print_node(f, f.left(id), 3, out);
            break;
        case FormulaKind::Diamond:
            out += "<> ";
            print_node(f, f.left(id), 3, out);
            break;
        case FormulaKind::Mu:
        case FormulaKind::Nu:
            out += (k == FormulaKind::Mu) ? "mu " : "nu ";
            out += f.name(id);
            out += ". ";
            print_node(f, f.left(id), 0, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string Formula::to_string() const {
    std::string out;
    print_node(*this, 0, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { True, False, Mu, Nu, Ident, Amp, Pipe, Bang, Diamond, Box, Dot, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_space_and_comments();
        const int line = line_;
        const int col = column_;
        if (pos_ >= text_.size()) {
            current_ = Token{Tok::End, "", line, col};
            return;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ident += text_[pos_];
                bump();
            }
            Tok kind = Tok::Ident;
            if (ident == "true") kind = Tok::True;
            else if (ident == "false") kind = Tok::False;
            else if (ident == "mu") kind = Tok::Mu;
            else if (ident == "nu") kind = Tok::Nu;
            current_ = Token{kind, std::move(ident), line, col};
            return;
        }
        switch (c) {
            case '&': bump(); current_ = Token{Tok::Amp, "&", line, col}; return;
            case '|': bump(); current_ = Token{Tok::Pipe, "|", line, col}; return;
            case '!': bump(); current_ = Token{Tok::Bang, "!", line, col}; return;
            case '.': bump(); current_ = Token{Tok::Dot, ".", line, col}; return;
            case '(': bump(); current_ = Token{Tok::LParen, "(", line, col}; return;
            case ')': bump(); current_ = Token{Tok::RParen, ")", line, col}; return;
            case '<':
                bump();
                if (pos_ >= text_.size() || text_[pos_] != '>') throw ParseError("expected '>' after '<'", line, col);
                bump();
                current_ = Token{Tok::Diamond, "<>", line, col};
                return;
            case '[':
                bump();
                if (pos_ >= text_.size() || text_[pos_] != ']') throw ParseError("expected ']' after '['", line, col);
                bump();
                current_ = Token{Tok::Box, "[]", line, col};
                return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_{Tok::End, "", 1, 1};
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Formula run() {
        Formula f = parse_or();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) {
            throw ParseError("unexpected '" + t.text + "' after formula", t.line, t.column);
        }
        return f;
    }

private:
    Formula parse_or() {
        Formula f = parse_and();
        while (lex_.peek().kind == Tok::Pipe) {
            lex_.take();
            f = Formula::disj(f, parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (lex_.peek().kind == Tok::Amp) {
            lex_.take();
            f = Formula::conj(f, parse_unary());
        }
        return f;
    }

    Formula parse_unary() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Diamond:
                lex_.take();
                return Formula::diamond(parse_unary());
            case Tok::Box:
                lex_.take();
                return Formula::box(parse_unary());
            case Tok::Bang: {
                lex_.take();
                const Token name = lex_.peek();
                if (name.kind != Tok::Ident) {
                    throw ParseError("negation is only allowed on atomic propositions", t.line, t.column);
                }
                lex_.take();
                return Formula::neg_atom(name.text);
            }
            case Tok::Mu:
            case Tok::Nu:
                return parse_binder();
            default:
                return parse_primary();
        }
    }

    Formula parse_binder() {
        const Token binder = lex_.take();
        const Token name = lex_.peek();
        if (name.kind != Tok::Ident) {
            throw ParseError("expected variable name after '" + binder.text + "'", name.line, name.column);
        }
        lex_.take();
        const Token dot = lex_.peek();
        if (dot.kind != Tok::Dot) {
            throw ParseError("expected '.' after bound variable", dot.line, dot.column);
        }
        lex_.take();
        Formula body = parse_or();  // binder bodies extend as far right as possible
        if (body_has_negated(body, 0, name.text)) {
            throw ParseError("variable '" + name.text + "' occurs negated under its binder", binder.line,
                             binder.column);
        }
        return binder.kind == Tok::Mu ? Formula::mu(name.text, body) : Formula::nu(name.text, body);
    }

    Formula parse_primary() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::True:
                lex_.take();
                return Formula::top();
            case Tok::False:
                lex_.take();
                return Formula::bottom();
            case Tok::Ident:
                lex_.take();
                return Formula::atom(t.text);
            case Tok::LParen: {
                lex_.take();
                Formula f = parse_or();
                const Token close = lex_.peek();
                if (close.kind != Tok::RParen) {
                    throw ParseError("expected ')'", close.line, close.column);
                }
                lex_.take();
                return f;
            }
            case Tok::End:
                throw ParseError("unexpected end of input", t.line, t.column);
            default:
                throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
        }
    }

    Lexer lex_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Analyses
// ---------------------------------------------------------------------------

std::set<std::string> free_vars(const Formula& f) {
    const int n = f.node_count();
    std::vector<std::set<std::string>> free(n);
    // Children have larger pre-order ids than their parent, so a descending
    // sweep is a bottom-up pass.
    for (NodeId id = n - 1; id >= 0; --id) {
        switch (f.kind(id)) {
            case FormulaKind::Bottom:
            case FormulaKind::Top:
                break;
            case FormulaKind::Atom:
            case FormulaKind::NegAtom:
                free[id].insert(f.name(id));
                break;
            case FormulaKind::And:
            case FormulaKind::Or:
                free[id] = free[f.left(id)];
                free[id].insert(free[f.right(id)].begin(), free[f.right(id)].end());
                break;
            case FormulaKind::Box:
            case FormulaKind::Diamond:
                free[id] = free[f.left(id)];
                break;
            case FormulaKind::Mu:
            case FormulaKind::Nu:
                free[id] = free[f.left(id)];
                free[id].erase(f.name(id));
                break;
        }
    }
    return free[0];
}

std::vector<std::pair<NodeId, Formula>> subformulas(const Formula& f) {
    std::vector<std::pair<NodeId, Formula>> out;
    out.reserve(f.node_count());
    for (NodeId id = 0; id < f.node_count(); ++id) {
        out.emplace_back(id, f.subtree(id));
    }
    return out;
}

AnalysisTable alternation_depth(const Formula& f) {
    const int n = f.node_count();
    std::vector<NodeAnalysis> rows(n);
    for (NodeId id = n - 1; id >= 0; --id) {
        NodeAnalysis& row = rows[id];
        switch (f.kind(id)) {
            case FormulaKind::Bottom:
            case FormulaKind::Top:
                break;
            case FormulaKind::Atom:
            case FormulaKind::NegAtom:
                row.free.insert(f.name(id));
                break;
            case FormulaKind::And:
            case FormulaKind::Or: {
                const NodeAnalysis& l = rows[f.left(id)];
                const NodeAnalysis& r = rows[f.right(id)];
                row.free = l.free;
                row.free.insert(r.free.begin(), r.free.end());
                row.depth = std::max(l.depth, r.depth);
                break;
            }
            case FormulaKind::Box:
            case FormulaKind::Diamond:
                row.free = rows[f.left(id)].free;
                row.depth = rows[f.left(id)].depth;
                break;
            case FormulaKind::Mu:
            case FormulaKind::Nu: {
                const bool is_mu = f.kind(id) == FormulaKind::Mu;
                const std::string& var = f.name(id);
                const NodeId body = f.left(id);
                row.fix_class = is_mu ? FixClass::Mu : FixClass::Nu;
                row.free = rows[body].free;
                row.free.erase(var);
                // max of {1, depth(body)} and 1 + depth of every subformula of
                // the opposite fixed-point class in which the bound variable
                // occurs free.
                int depth = std::max(1, rows[body].depth);
                const FormulaKind opposite = is_mu ? FormulaKind::Nu : FormulaKind::Mu;
                for (NodeId d = body; d < f.subtree_end(body); ++d) {
                    if (f.kind(d) == opposite && rows[d].free.count(var) > 0) {
                        depth = std::max(depth, rows[d].depth + 1);
                    }
                }
                row.depth = depth;
                break;
            }
        }
    }
    return AnalysisTable(std::move(rows));
}

// ---------------------------------------------------------------------------
// Well-naming
// ---------------------------------------------------------------------------

namespace {

struct Renamer {
    const Formula& f;
    std::set<std::string> used;                 // every name claimed so far
    std::vector<std::map<std::string, std::string>> scopes;  // active renamings

    std::string resolve(const std::string& name) const {
        for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
            auto hit = it->find(name);
            if (hit != it->end()) return hit->second;
        }
        return name;
    }

    std::string fresh(const std::string& base) {
        if (used.insert(base).second) return base;
        for (int i = 1;; ++i) {
            std::string candidate = base + std::to_string(i);
            if (used.insert(candidate).second) return candidate;
        }
    }

    Formula rebuild(NodeId id) {
        switch (f.kind(id)) {
            case FormulaKind::Bottom:
                return Formula::bottom();
            case FormulaKind::Top:
                return Formula::top();
            case FormulaKind::Atom:
                return Formula::atom(resolve(f.name(id)));
            case FormulaKind::NegAtom:
                return Formula::neg_atom(resolve(f.name(id)));
            case FormulaKind::And:
                return Formula::conj(rebuild(f.left(id)), rebuild(f.right(id)));
            case FormulaKind::Or:
                return Formula::disj(rebuild(f.left(id)), rebuild(f.right(id)));
            case FormulaKind::Box:
                return Formula::box(rebuild(f.left(id)));
            case FormulaKind::Diamond:
                return Formula::diamond(rebuild(f.left(id)));
            case FormulaKind::Mu:
            case FormulaKind::Nu: {
                const std::string& var = f.name(id);
                std::string renamed = fresh(var);
                scopes.push_back({{var, renamed}});
                Formula body = rebuild(f.left(id));
                scopes.pop_back();
                return f.kind(id) == FormulaKind::Mu ? Formula::mu(renamed, body)
                                                     : Formula::nu(renamed, body);
            }
        }
        throw std::logic_error("unreachable formula kind");
    }
};

}  // namespace

Formula well_name(const Formula& f) {
    Renamer r{f, free_vars(f), {}};
    return r.rebuild(0);
}

}  // namespace mucalc
