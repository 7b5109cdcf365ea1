#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mucalc {

/// Node kinds of the positive-normal-form syntax: negation occurs on atomic
/// propositions only, fixed-point binders carry the variable they bind.
enum class FormulaKind { Bottom, Top, Atom, NegAtom, And, Or, Box, Diamond, Mu, Nu };

using NodeId = int;

/// Immutable formula tree. Nodes live in a flat pre-order array, so the id of
/// a node is its ordinal in the fixed pre-order traversal and the subtree of
/// node i occupies the contiguous range [i, subtree_end(i)).
///
/// Bound μ/ν-variables and atomic propositions share one identifier
/// namespace; an occurrence is a variable exactly when some enclosing binder
/// introduces its name.
class Formula {
public:
    static Formula bottom();
    static Formula top();
    static Formula atom(std::string name);
    static Formula neg_atom(std::string name);
    static Formula conj(const Formula& left, const Formula& right);
    static Formula disj(const Formula& left, const Formula& right);
    static Formula box(const Formula& body);
    static Formula diamond(const Formula& body);
    /// Throws std::invalid_argument if `var` occurs negated in `body`.
    static Formula mu(std::string var, const Formula& body);
    static Formula nu(std::string var, const Formula& body);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    NodeId root() const { return 0; }

    FormulaKind kind(NodeId id) const { return nodes_[id].kind; }
    /// Atom/NegAtom: proposition name; Mu/Nu: bound variable.
    const std::string& name(NodeId id) const { return nodes_[id].name; }
    /// And/Or: left operand; Box/Diamond/Mu/Nu: body. -1 for leaves.
    NodeId left(NodeId id) const { return nodes_[id].left; }
    /// And/Or: right operand. -1 otherwise.
    NodeId right(NodeId id) const { return nodes_[id].right; }

    /// One past the last node of the subtree rooted at `id`.
    NodeId subtree_end(NodeId id) const;

    /// Copy of the subtree rooted at `id` as a formula of its own.
    Formula subtree(NodeId id) const;

    /// Grammar-conforming rendering; parse_formula(to_string()) reproduces
    /// the tree exactly.
    std::string to_string() const;

    bool operator==(const Formula& other) const = default;

private:
    struct Node {
        FormulaKind kind;
        std::string name;
        NodeId left = -1;
        NodeId right = -1;
        bool operator==(const Node&) const = default;
    };

    Formula() = default;
    static Formula leaf(FormulaKind kind, std::string name);
    static Formula unary(FormulaKind kind, std::string name, const Formula& body);
    static Formula binary(FormulaKind kind, const Formula& left, const Formula& right);

    std::vector<Node> nodes_;
};

enum class FixClass { None, Mu, Nu };

/// Per-node result of the syntactic analyses, indexed by node id.
struct NodeAnalysis {
    std::set<std::string> free;  ///< free names of the subtree
    int depth = 0;               ///< alternation depth of the subtree
    FixClass fix_class = FixClass::None;
};

class AnalysisTable {
public:
    explicit AnalysisTable(std::vector<NodeAnalysis> rows) : rows_(std::move(rows)) {}
    const NodeAnalysis& at(NodeId id) const { return rows_.at(id); }
    int size() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<NodeAnalysis> rows_;
};

/// Parses the ASCII grammar (see README). Unary operators bind tightest,
/// then '&', then '|'; mu/nu bodies extend as far right as possible.
/// Throws ParseError with a 1-based position on malformed input.
Formula parse_formula(std::string_view text);

/// Alpha-renames bound variables so that no two binders share a name and no
/// name is both bound and free. Fresh names are formed by appending the
/// smallest positive integer that avoids every name in use (X -> X1).
/// Idempotent; preserves the tree shape and the free names.
Formula well_name(const Formula& f);

/// The inductive free-name set.
std::set<std::string> free_vars(const Formula& f);

/// Every node of the tree, each exactly once, in pre-order.
std::vector<std::pair<NodeId, Formula>> subformulas(const Formula& f);

/// Free names, alternation depth and fixed-point class for every node,
/// computed bottom-up. Expects a well-named formula.
AnalysisTable alternation_depth(const Formula& f);

}  // namespace mucalc
