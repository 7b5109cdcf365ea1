#include "mucalc/driver.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "mucalc/compile.hpp"
#include "mucalc/game.hpp"
#include "mucalc/parse_error.hpp"
#include "mucalc/semantics.hpp"

namespace mucalc {

CheckReport check_semantic(const PointedSystem& p, const Formula& f) {
    CheckReport report;
    report.method = CheckMethod::Semantic;
    EvalStats stats;
    report.verdict = models(p, well_name(f), &stats);
    report.fixpoints = stats.fixpoints;
    report.max_chain = stats.max_chain;
    return report;
}

CheckReport check_game(const PointedSystem& p, const Formula& f) {
    CheckReport report;
    report.method = CheckMethod::Game;
    const Automaton automaton = compile(well_name(f));
    const ParityGame game = build_acceptance_game(automaton, p);
    report.game_vertices = game.vertex_count();
    report.game_edges = game.edge_count();
    const WinningRegions regions = solve(game);
    report.verdict = regions.region0.count(*game.initial()) > 0;
    if (report.verdict) report.witness = regions.strategy0;
    return report;
}

// ---------------------------------------------------------------------------
// Bounded satisfiability
// ---------------------------------------------------------------------------

namespace {

// Enumerates all structures with exactly n states over `atoms`: every
// labeling (per-state atom subsets) crossed with every transition relation,
// in ascending bitmask order so small witnesses come out first.
std::optional<PointedSystem> search_size(const Formula& f, int n,
                                         const std::vector<std::string>& atoms) {
    std::vector<std::string> states;
    for (int i = 0; i < n; ++i) states.push_back("s" + std::to_string(i));

    const int label_bits = n * static_cast<int>(atoms.size());
    const int edge_bits = n * n;
    if (label_bits >= 63 || edge_bits >= 63) {
        throw std::invalid_argument("bounded search space too large at " + std::to_string(n) +
                                    " states");
    }
    const unsigned long long label_limit = 1ULL << label_bits;
    const unsigned long long edge_limit = 1ULL << edge_bits;

    for (unsigned long long labeling = 0; labeling < label_limit; ++labeling) {
        std::map<std::string, std::set<std::string>> labels;
        for (int s = 0; s < n; ++s) {
            for (size_t a = 0; a < atoms.size(); ++a) {
                if (labeling >> (s * atoms.size() + a) & 1ULL) labels[states[s]].insert(atoms[a]);
            }
        }
        for (unsigned long long relation = 0; relation < edge_limit; ++relation) {
            std::vector<std::pair<std::string, std::string>> transitions;
            for (int src = 0; src < n; ++src) {
                for (int dst = 0; dst < n; ++dst) {
                    if (relation >> (src * n + dst) & 1ULL) {
                        transitions.emplace_back(states[src], states[dst]);
                    }
                }
            }
            PointedSystem candidate =
                PointedSystem::make(KripkeStructure::make(states, transitions, labels), states[0]);
            if (models(candidate, f)) return candidate;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PointedSystem> sat_bounded(const Formula& f, int max_states) {
    if (max_states < 1) throw std::invalid_argument("the state bound must be at least 1");
    const Formula named = well_name(f);
    const std::set<std::string> free = free_vars(named);
    const std::vector<std::string> atoms(free.begin(), free.end());
    for (int n = 1; n <= max_states; ++n) {
        if (auto found = search_size(named, n, atoms)) return found;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// CLI
// ---------------------------------------------------------------------------

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// A formula argument is either inline text or @file.
Formula load_formula(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return parse_formula(read_file(arg.substr(1)));
    return parse_formula(arg);
}

PointedSystem load_kripke(const std::string& path) { return parse_kripke(read_file(path)); }

struct CliOptions {
    std::string kripke_file;
    std::string formula;
    std::string method = "both";
    std::string out_file;
    bool emit_dot = false;
    bool emit_pg = false;
    bool witness = false;
    int bound = 0;
};

int do_check(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    const PointedSystem system = load_kripke(opt.kripke_file);
    const Formula formula = load_formula(opt.formula);
    bool verdict = false;
    if (opt.method == "semantic") {
        const CheckReport report = check_semantic(system, formula);
        verdict = report.verdict;
        err << "fixpoints=" << report.fixpoints << " max-chain=" << report.max_chain << "\n";
    } else if (opt.method == "game") {
        const CheckReport report = check_game(system, formula);
        verdict = report.verdict;
        err << "game-vertices=" << report.game_vertices << " game-edges=" << report.game_edges << "\n";
    } else {
        const CheckReport semantic = check_semantic(system, formula);
        const CheckReport game = check_game(system, formula);
        if (semantic.verdict != game.verdict) {
            err << "internal error: the two checking methods disagree "
                << "(semantic=" << (semantic.verdict ? "true" : "false")
                << ", game=" << (game.verdict ? "true" : "false") << ")\n";
            return 2;
        }
        verdict = semantic.verdict;
        err << "methods agree; game-vertices=" << game.game_vertices
            << " game-edges=" << game.game_edges << " fixpoints=" << semantic.fixpoints
            << " max-chain=" << semantic.max_chain << "\n";
    }
    out << (verdict ? "true" : "false") << "\n";
    return verdict ? 0 : 1;
}

int do_compile(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    const Automaton automaton = compile(well_name(load_formula(opt.formula)));
    const std::string text = print_automaton(automaton);
    if (opt.out_file.empty()) {
        out << text;
    } else {
        std::ofstream file(opt.out_file, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write '" + opt.out_file + "'");
        file << text;
        err << "wrote " << opt.out_file << "\n";
    }
    return 0;
}

int do_game(const CliOptions& opt, std::ostream& out, std::ostream&) {
    const PointedSystem system = load_kripke(opt.kripke_file);
    const Automaton automaton = compile(well_name(load_formula(opt.formula)));
    const ParityGame game = build_acceptance_game(automaton, system);
    out << (opt.emit_dot ? export_dot(game) : print_pgsolver(game));
    return 0;
}

int do_solve(const CliOptions& opt, std::ostream& out, std::ostream&) {
    const ParityGame game = parse_pgsolver(read_file(opt.kripke_file));
    const WinningRegions regions = solve(game);
    // The format carries no initial vertex; the verdict refers to vertex 0.
    const bool zero_wins = regions.region0.count(0) > 0;
    out << (zero_wins ? 0 : 1) << "\n";
    if (opt.witness) {
        out << "region0";
        for (const int v : regions.region0) out << ' ' << v;
        out << "\nregion1";
        for (const int v : regions.region1) out << ' ' << v;
        out << "\n";
        const Strategy& strategy = zero_wins ? regions.strategy0 : regions.strategy1;
        for (const auto& [from, to] : strategy.moves) {
            out << "move " << from << ' ' << to << "\n";
        }
    }
    return zero_wins ? 0 : 1;
}

int do_sat(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    const Formula formula = load_formula(opt.formula);
    if (const auto model = sat_bounded(formula, opt.bound)) {
        out << "sat\n" << print_kripke(*model);
        return 0;
    }
    // Bounded search cannot conclude unsatisfiability.
    out << "unknown\n";
    err << "no model with at most " << opt.bound << " state(s)\n";
    return 1;
}

int do_alternation(const CliOptions& opt, std::ostream& out, std::ostream&) {
    const Formula formula = well_name(load_formula(opt.formula));
    const AnalysisTable table = alternation_depth(formula);
    out << table.at(formula.root()).depth << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"modal mu-calculus model checking via fixed points and parity games"};
    app.require_subcommand(1);
    CliOptions opt;

    CLI::App* check = app.add_subcommand("check", "model-check a formula against a Kripke structure");
    check->add_option("kripke", opt.kripke_file, "Kripke structure file")->required();
    check->add_option("formula", opt.formula, "formula (inline or @file)")->required();
    check->add_option("--method", opt.method, "semantic, game, or both (default)")
        ->check(CLI::IsMember({"semantic", "game", "both"}));

    CLI::App* compile_cmd = app.add_subcommand("compile", "translate a formula to an automaton dump");
    compile_cmd->add_option("formula", opt.formula, "formula (inline or @file)")->required();
    compile_cmd->add_option("--out", opt.out_file, "write the dump to a file");

    CLI::App* game_cmd = app.add_subcommand("game", "emit the acceptance parity game");
    game_cmd->add_option("kripke", opt.kripke_file, "Kripke structure file")->required();
    game_cmd->add_option("formula", opt.formula, "formula (inline or @file)")->required();
    CLI::Option* dot_flag = game_cmd->add_flag("--dot", opt.emit_dot, "Graphviz output");
    game_cmd->add_flag("--pg", opt.emit_pg, "PGSolver output (default)")->excludes(dot_flag);

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve a PGSolver parity game");
    solve_cmd->add_option("game", opt.kripke_file, "PGSolver file")->required();
    solve_cmd->add_flag("--witness", opt.witness, "print regions and the winning strategy");

    CLI::App* sat_cmd = app.add_subcommand("sat", "bounded model search");
    sat_cmd->add_option("formula", opt.formula, "formula (inline or @file)")->required();
    sat_cmd->add_option("--bound", opt.bound, "maximum number of states")->required();

    CLI::App* alt_cmd = app.add_subcommand("alternation", "print the alternation depth");
    alt_cmd->add_option("formula", opt.formula, "formula (inline or @file)")->required();

    std::vector<const char*> argv;
    argv.push_back("mucheck");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return do_check(opt, out, err);
        if (compile_cmd->parsed()) return do_compile(opt, out, err);
        if (game_cmd->parsed()) return do_game(opt, out, err);
        if (solve_cmd->parsed()) return do_solve(opt, out, err);
        if (sat_cmd->parsed()) return do_sat(opt, out, err);
        if (alt_cmd->parsed()) return do_alternation(opt, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "unknown subcommand\n";
    return 2;
}

}  // namespace mucalc
