#include "mucalc/semantics.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace mucalc {

namespace {

StateSet set_union(const StateSet& a, const StateSet& b) {
    StateSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

StateSet set_intersect(const StateSet& a, const StateSet& b) {
    StateSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

StateSet all_states(const KripkeStructure& k) {
    return StateSet(k.states().begin(), k.states().end());
}

FixpointResult iterate_from(const std::function<StateSet(const StateSet&)>& step,
                            const KripkeStructure& k, StateSet start) {
    StateSet current = std::move(start);
    int changes = 0;
    while (true) {
        StateSet next = step(current);
        if (next == current) return FixpointResult{std::move(current), changes};
        ++changes;
        if (changes > k.state_count()) {
            throw std::logic_error("fixed-point chain did not stabilize within |S| steps; "
                                   "the transformer is not monotone");
        }
        current = std::move(next);
    }
}

struct Evaluator {
    const Formula& f;
    const KripkeStructure& k;
    Valuation env;
    EvalStats* stats;

    StateSet interpret(const std::string& name) const {
        if (const auto it = env.find(name); it != env.end()) return it->second;
        StateSet out;
        for (const std::string& s : k.states()) {
            if (k.labels(s).count(name) > 0) out.insert(s);
        }
        return out;
    }

    StateSet run(NodeId id) {
        switch (f.kind(id)) {
            case FormulaKind::Bottom:
                return {};
            case FormulaKind::Top:
                return all_states(k);
            case FormulaKind::Atom:
                return interpret(f.name(id));
            case FormulaKind::NegAtom: {
                StateSet out;
                const StateSet pos = interpret(f.name(id));
                for (const std::string& s : k.states()) {
                    if (pos.count(s) == 0) out.insert(s);
                }
                return out;
            }
            case FormulaKind::And:
                return set_intersect(run(f.left(id)), run(f.right(id)));
            case FormulaKind::Or:
                return set_union(run(f.left(id)), run(f.right(id)));
            case FormulaKind::Box: {
                const StateSet body = run(f.left(id));
                StateSet out;
                for (const std::string& s : k.states()) {
                    const StateSet& succ = k.successors(s);
                    if (std::includes(body.begin(), body.end(), succ.begin(), succ.end())) out.insert(s);
                }
                return out;
            }
            case FormulaKind::Diamond: {
                const StateSet body = run(f.left(id));
                StateSet out;
                for (const std::string& s : k.states()) {
                    for (const std::string& succ : k.successors(s)) {
                        if (body.count(succ) > 0) {
                            out.insert(s);
                            break;
                        }
                    }
                }
                return out;
            }
            case FormulaKind::Mu:
            case FormulaKind::Nu: {
                const std::string& var = f.name(id);
                const NodeId body = f.left(id);
                const auto saved = env.find(var) != env.end()
                                       ? std::optional<StateSet>(env[var])
                                       : std::nullopt;
                const auto step = [&](const StateSet& x) {
                    env[var] = x;
                    return run(body);
                };
                const FixpointResult result = f.kind(id) == FormulaKind::Mu
                                                  ? lfp_iterate(step, k)
                                                  : gfp_iterate(step, k);
                if (saved) {
                    env[var] = *saved;
                } else {
                    env.erase(var);
                }
                if (stats) {
                    ++stats->fixpoints;
                    stats->max_chain = std::max(stats->max_chain, result.chain_length);
                }
                return result.value;
            }
        }
        throw std::logic_error("unreachable formula kind");
    }
};

}  // namespace

FixpointResult lfp_iterate(const std::function<StateSet(const StateSet&)>& step,
                           const KripkeStructure& k) {
    return iterate_from(step, k, {});
}

FixpointResult gfp_iterate(const std::function<StateSet(const StateSet&)>& step,
                           const KripkeStructure& k) {
    return iterate_from(step, k, all_states(k));
}

StateSet eval(const Formula& f, const KripkeStructure& k, const Valuation& v, EvalStats* stats) {
    Evaluator e{f, k, v, stats};
    return e.run(f.root());
}

bool models(const PointedSystem& p, const Formula& f, EvalStats* stats) {
    return eval(f, p.structure, {}, stats).count(p.initial) > 0;
}

}  // namespace mucalc
