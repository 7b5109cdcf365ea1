#include "mucalc/compile.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace mucalc {

namespace {

std::string shorthand(const Formula& f, NodeId id) {
    switch (f.kind(id)) {
        case FormulaKind::Bottom: return "false";
        case FormulaKind::Top: return "true";
        case FormulaKind::Atom: return f.name(id);
        case FormulaKind::NegAtom: return "not_" + f.name(id);
        case FormulaKind::And: return "and";
        case FormulaKind::Or: return "or";
        case FormulaKind::Box: return "box";
        case FormulaKind::Diamond: return "dia";
        case FormulaKind::Mu: return "mu_" + f.name(id);
        case FormulaKind::Nu: return "nu_" + f.name(id);
    }
    return "";
}

int binder_priority(FixClass fix_class, int depth) {
    if (fix_class == FixClass::Mu) return 2 * ((depth + 1) / 2) - 1;  // odd
    return 2 * (depth / 2);                                          // even
}

}  // namespace

Automaton compile(const Formula& f) {
    const int n = f.node_count();

    // Binder of each name; unique after well-naming.
    std::map<std::string, NodeId> binder;
    for (NodeId id = 0; id < n; ++id) {
        const FormulaKind k = f.kind(id);
        if (k == FormulaKind::Mu || k == FormulaKind::Nu) {
            if (!binder.emplace(f.name(id), id).second) {
                throw std::invalid_argument("formula is not well-named: two binders for '" +
                                            f.name(id) + "'");
            }
        }
    }
    for (const std::string& name : free_vars(f)) {
        if (binder.count(name) > 0) {
            throw std::invalid_argument("formula is not well-named: '" + name +
                                        "' is both bound and free");
        }
    }

    const AnalysisTable table = alternation_depth(f);

    std::vector<std::string> names(n);
    for (NodeId id = 0; id < n; ++id) {
        names[id] = "n" + std::to_string(id) + "_" + shorthand(f, id);
    }

    // State priorities. A binder whose subtree regenerates no enclosing
    // binder gets the depth-based value (odd for mu, even for nu). A binder
    // below that takes the tightest value its regeneration targets allow:
    // equal for the same class, one less for the opposite class. Every cycle
    // then peaks exactly at its outermost regenerated binder, and the
    // distinct priorities of a strongly connected component count its
    // alternation levels. Other states share the priority of their innermost
    // binder; terminal states keep 0.
    struct BinderFrame {
        NodeId end;
        bool is_mu;
        int priority;
        const std::string* var;
    };
    std::vector<int> inherited(n, 0);
    {
        std::vector<BinderFrame> binder_stack;
        for (NodeId id = 0; id < n; ++id) {
            while (!binder_stack.empty() && binder_stack.back().end <= id) binder_stack.pop_back();
            const FixClass fc = table.at(id).fix_class;
            if (fc != FixClass::None) {
                const bool is_mu = fc == FixClass::Mu;
                int prio = binder_priority(fc, table.at(id).depth);
                bool constrained = false;
                for (const BinderFrame& frame : binder_stack) {
                    if (table.at(id).free.count(*frame.var) == 0) continue;
                    const int allowance = frame.is_mu == is_mu ? frame.priority : frame.priority - 1;
                    prio = constrained ? std::min(prio, allowance) : allowance;
                    constrained = true;
                }
                binder_stack.push_back(BinderFrame{f.subtree_end(id), is_mu, prio, &f.name(id)});
            }
            inherited[id] = binder_stack.empty() ? 0 : binder_stack.back().priority;
        }
    }

    std::map<std::string, TransitionCondition> delta;
    std::map<std::string, int> priorities;
    for (NodeId id = 0; id < n; ++id) {
        TransitionCondition condition;
        int priority = inherited[id];
        switch (f.kind(id)) {
            case FormulaKind::Bottom:
                condition = TransitionCondition::const0();
                priority = 0;
                break;
            case FormulaKind::Top:
                condition = TransitionCondition::const1();
                priority = 0;
                break;
            case FormulaKind::Atom: {
                const auto b = binder.find(f.name(id));
                if (b == binder.end()) {
                    condition = TransitionCondition::prop_holds(f.name(id));
                    priority = 0;
                } else {
                    condition = TransitionCondition::state(names[b->second]);
                }
                break;
            }
            case FormulaKind::NegAtom:
                condition = TransitionCondition::prop_fails(f.name(id));
                priority = 0;
                break;
            case FormulaKind::And:
                condition = TransitionCondition::conj(names[f.left(id)], names[f.right(id)]);
                break;
            case FormulaKind::Or:
                condition = TransitionCondition::disj(names[f.left(id)], names[f.right(id)]);
                break;
            case FormulaKind::Box:
                condition = TransitionCondition::box(names[f.left(id)]);
                break;
            case FormulaKind::Diamond:
                condition = TransitionCondition::diamond(names[f.left(id)]);
                break;
            case FormulaKind::Mu:
            case FormulaKind::Nu:
                condition = TransitionCondition::state(names[f.left(id)]);
                break;
        }
        delta[names[id]] = condition;
        priorities[names[id]] = priority;
    }

    return Automaton::make(std::move(names), "n0_" + shorthand(f, 0), std::move(delta),
                           std::move(priorities));
}

}  // namespace mucalc
