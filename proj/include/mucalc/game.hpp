#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mucalc/automaton.hpp"
#include "mucalc/kripke.hpp"

namespace mucalc {

/// Finite parity game arena: vertices with an owner and a priority, a move
/// relation, and an optional initial vertex. Vertices are addressed by their
/// position; successor lists are kept sorted. Dead-ends are permitted and
/// mean that the owner of the stuck vertex loses.
class ParityGame {
public:
    struct Vertex {
        std::string name;
        int owner = 0;  ///< 0 or 1
        int priority = 0;
        bool operator==(const Vertex&) const = default;
    };

    /// Validates owners, priorities and edge endpoints.
    static ParityGame make(std::vector<Vertex> vertices,
                           const std::vector<std::pair<int, int>>& edges,
                           std::optional<int> initial = std::nullopt);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const;
    const Vertex& vertex(int v) const { return vertices_[v]; }
    const std::vector<int>& successors(int v) const { return successors_[v]; }
    bool has_edge(int from, int to) const;
    std::optional<int> initial() const { return initial_; }

    /// Position of the vertex with the given name, or -1.
    int find_vertex(const std::string& name) const;

    bool operator==(const ParityGame&) const = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::vector<int>> successors_;  // sorted
    std::optional<int> initial_;
};

/// A play given in ultimately periodic form: `prefix` followed by `cycle`
/// repeated forever, or a finite play (`cycle` empty) ending in a dead-end.
struct UltimatelyPeriodicPlay {
    std::vector<int> prefix;
    std::vector<int> cycle;
};

/// Winning condition used by evaluate_play. Acceptance games are decided
/// under max-parity; min-parity and Muller evaluation exist to replay
/// arbitrary arenas.
struct WinningCondition {
    enum class Kind { MaxParity, MinParity, Muller };
    Kind kind = Kind::MaxParity;
    std::vector<std::set<int>> accepting;  ///< Muller family over priority sets

    static WinningCondition max_parity() { return {Kind::MaxParity, {}}; }
    static WinningCondition min_parity() { return {Kind::MinParity, {}}; }
    static WinningCondition muller(std::vector<std::set<int>> family) {
        return {Kind::Muller, std::move(family)};
    }
};

/// Winner of the play: a finite play is lost by the owner of the dead-end;
/// an infinite play is judged on the set of priorities occurring in the
/// cycle. Throws std::invalid_argument on a malformed play (a non-edge step,
/// an empty play, or a finite play not ending in a dead-end).
int evaluate_play(const ParityGame& g, const UltimatelyPeriodicPlay& play,
                  const WinningCondition& condition);

/// The acceptance game of automaton `a` over pointed system `p`: vertices
/// are the pairs (q, s) reachable from (initial state, initial system
/// state), the priority of (q, s) is the automaton priority of q, and owner
/// and moves follow the shape of delta(q). Player 0 wins from the initial
/// vertex under max-parity iff `a` accepts `p`.
ParityGame build_acceptance_game(const Automaton& a, const PointedSystem& p);

/// Graphviz rendering: Player-0 vertices as ellipses, Player-1 vertices as
/// boxes, labels carrying the priority, the initial vertex double-bordered.
std::string export_dot(const ParityGame& g);

/// PGSolver exchange format:
///   parity <max-vertex-id>;
///   <id> <priority> <owner> <succ>,<succ>,... ["<name>"];
/// An absent successor list marks a dead-end. Identities are normalized to
/// 0..n-1 in id order; parse/print round-trips are stable. The format does
/// not carry an initial vertex.
ParityGame parse_pgsolver(std::string_view text);
std::string print_pgsolver(const ParityGame& g);

}  // namespace mucalc
