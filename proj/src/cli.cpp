#include "cbn/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cbn/analysis.hpp"
#include "cbn/minctrl.hpp"
#include "cbn/model.hpp"
#include "cbn/oracle.hpp"
#include "cbn/records.hpp"
#include "cbn/reduction.hpp"
#include "cbn/synthesis.hpp"

namespace cbn::cli {
namespace {

using nlohmann::json;

struct UsageError : Error {
    using Error::Error;
};

// Raised when a self-check (re-simulation, certificate) fails.
struct InternalError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ".dbn" files hold disjunctive networks and go through the De Morgan mapping.
Cbcn load_network(const std::string& path) {
    const auto text = read_file(path);
    const bool disjunctive = path.size() >= 4 && path.compare(path.size() - 4, 4, ".dbn") == 0;
    return disjunctive ? dbn_to_cbn(text) : parse_cbn(text);
}

NetworkState parse_state(const std::string& text, std::size_t n, const char* what) {
    const auto x = NetworkState::from_string(text);
    if (x.size() != n) {
        throw UsageError(std::string(what) + " '" + text + "' has " + std::to_string(x.size()) +
                         " bits, network has " + std::to_string(n) + " variables");
    }
    return x;
}

std::string set_text(const std::vector<std::string>& names) {
    std::string s = "{";
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (k) s += ",";
        s += names[k];
    }
    return s + "}";
}

std::vector<std::string> var_names(const std::vector<VarIndex>& set) {
    std::vector<std::string> out;
    for (VarIndex i : set) out.push_back(var_name(i));
    return out;
}

struct Context {
    std::ostream& out;
    bool json_output = false;

    void emit(const json& record) const { out << record.dump(2) << '\n'; }
};

int cmd_check(const Context& ctx, const std::string& file, bool dot) {
    const auto net = load_network(file);
    const DependencyGraph g(net);
    if (dot) {
        ctx.out << to_dot(g);
        return kSuccess;
    }
    const auto verdict = check_controllability(g);
    if (ctx.json_output) {
        ctx.emit(to_json(verdict, g));
    } else {
        ctx.out << verdict.describe(g) << '\n';
    }
    return verdict.controllable ? kSuccess : kNegative;
}

int cmd_decompose(const Context& ctx, const std::string& file) {
    const auto net = load_network(file);
    const DependencyGraph g(net);
    const auto verdict = check_controllability(g);
    if (!verdict.controllable) {
        if (ctx.json_output) {
            ctx.emit({{"verdict", to_json(verdict, g)}, {"paths", nullptr}});
        } else {
            ctx.out << verdict.describe(g) << '\n';
        }
        return kNegative;
    }
    const auto paths = decompose_controlled_paths(g);
    if (ctx.json_output) {
        ctx.emit({{"verdict", to_json(verdict, g)}, {"paths", to_json(paths, g)}});
    } else {
        for (const auto& p : paths) ctx.out << format_path(p, g) << '\n';
    }
    return kSuccess;
}

int cmd_synthesize(const Context& ctx, const std::string& file, const std::string& from,
                   const std::string& to) {
    const auto net = load_network(file);
    const auto a = parse_state(from, net.size(), "--from");
    const auto b = parse_state(to, net.size(), "--to");
    const DependencyGraph g(net);
    const auto verdict = check_controllability(g);
    if (!verdict.controllable) {
        if (ctx.json_output) {
            ctx.emit({{"verdict", to_json(verdict, g)}, {"sequence", nullptr}});
        } else {
            ctx.out << verdict.describe(g) << '\n';
        }
        return kNegative;
    }
    const auto seq = synthesize(net, a, b);
    // Fail closed: nothing is printed unless the sequence re-simulates to the target.
    const auto trajectory = simulate(net, a, seq);
    if (trajectory.back() != b) {
        throw InternalError("synthesized sequence ends at " + trajectory.back().to_string() +
                            " instead of " + b.to_string());
    }
    if (ctx.json_output) {
        json steps = json::array();
        for (const auto& u : seq.steps()) steps.push_back(u.to_string());
        json controls = json::array();
        for (VarIndex i : net.controlled()) controls.push_back("U" + std::to_string(i + 1));
        ctx.emit({{"from", a.to_string()},
                  {"to", b.to_string()},
                  {"horizon", seq.horizon()},
                  {"controls", controls},
                  {"sequence", steps},
                  {"verified", true}});
    } else {
        ctx.out << format_sequence(seq);
    }
    return kSuccess;
}

int cmd_simulate(const Context& ctx, const std::string& file, const std::string& from,
                 const std::string& seq_text) {
    const auto net = load_network(file);
    const auto x0 = parse_state(from, net.size(), "--from");
    ControlSequence seq;
    try {
        seq = parse_sequence(seq_text, net.num_controls());
    } catch (const DimensionMismatch& e) {
        throw UsageError(std::string("--seq: ") + e.what());
    }
    const auto trajectory = simulate(net, x0, seq);
    if (ctx.json_output) {
        json states = json::array();
        for (const auto& x : trajectory) states.push_back(x.to_string());
        ctx.emit({{"trajectory", states}});
    } else {
        ctx.out << format_trajectory(trajectory);
    }
    return kSuccess;
}

int cmd_minimize(const Context& ctx, const std::string& file, bool greedy,
                 std::optional<std::size_t> k, std::optional<std::uint64_t> budget, bool timing,
                 bool serial) {
    const auto net = load_network(file);
    MinControlOptions options;
    if (budget) options.max_tests = *budget;
    if (serial) options.kernel = Kernel::Serial;

    MinControlResult result;
    try {
        result = greedy ? greedy_control_set(net.base()) : minimal_control_set(net.base(), options);
    } catch (const SearchBudgetExceeded& e) {
        if (ctx.json_output) {
            ctx.emit({{"error", "search budget exceeded"},
                      {"best_known", var_names(e.best_known())},
                      {"best_known_cardinality", e.best_known().size()}});
        } else {
            ctx.out << "budget exceeded; best known set " << set_text(var_names(e.best_known()))
                    << ", size " << e.best_known().size() << '\n';
        }
        return kLimit;
    }
    if (!result.certificate.controllable) throw InternalError("returned control set is not feasible");

    std::optional<bool> decision;
    if (k) decision = result.cardinality() <= *k;
    if (ctx.json_output) {
        auto record = to_json(result, timing);
        record["decision"] = decision ? json(*decision) : json(nullptr);
        ctx.emit(record);
    } else {
        ctx.out << "set " << set_text(var_names(result.control_set)) << ", size "
                << result.cardinality() << (result.exact ? " (exact)" : " (greedy)") << '\n';
        if (timing) ctx.out << "elapsed " << result.elapsed_seconds << " s\n";
        if (decision) ctx.out << (*decision ? "yes" : "no") << '\n';
    }
    return decision && !*decision ? kNegative : kSuccess;
}

int cmd_reduce(const Context& ctx, const std::string& file, std::size_t k,
               std::optional<std::uint64_t> budget, const std::string& emit_path) {
    const auto g = parse_edge_list(read_file(file));
    if (k > g.num_vertices()) throw UsageError("-k must not exceed |V|");
    const auto instance = build_reduction(g);
    if (!emit_path.empty()) {
        std::ofstream os(emit_path);
        if (!os) throw UsageError("cannot write '" + emit_path + "'");
        os << serialize_reduction(instance);
    }
    MinControlOptions options;
    if (budget) options.max_tests = *budget;
    ReductionResult result;
    try {
        result = solve_dominating_via_controllability(g, k, options);
    } catch (const SearchBudgetExceeded& e) {
        ctx.out << "budget exceeded; best known control count " << e.best_known().size() << '\n';
        return kLimit;
    }
    if (ctx.json_output) {
        ctx.emit(to_json(result, instance));
    } else {
        std::vector<std::string> y;
        for (Vertex v : result.dominating_set) y.push_back(vertex_name(v));
        ctx.out << (*result.decision ? "yes" : "no") << ", Y=" << set_text(y) << '\n';
        ctx.out << "gamma " << result.gamma << ", total controls " << result.total_controls
                << " (|E| = " << g.num_edges() << ")\n";
    }
    return *result.decision ? kSuccess : kNegative;
}

int cmd_oracle(const Context& ctx, const std::string& file, const std::vector<std::string>& pair,
               bool dot) {
    const auto net = load_network(file);
    const auto limits = OracleLimits::from_environment();
    const auto graph = state_graph(net, limits);
    if (dot) {
        ctx.out << to_dot(graph);
        return kSuccess;
    }
    if (!pair.empty()) {
        const auto a = parse_state(pair[0], net.size(), "--pair source");
        const auto b = parse_state(pair[1], net.size(), "--pair target");
        const auto seq = shortest_steering(graph, static_cast<StateCode>(a.to_integer()),
                                           static_cast<StateCode>(b.to_integer()));
        if (ctx.json_output) {
            json record = {{"from", a.to_string()}, {"to", b.to_string()}, {"reachable", seq.has_value()}};
            if (seq) {
                json steps = json::array();
                for (const auto& u : seq->steps()) steps.push_back(u.to_string());
                record["length"] = seq->horizon();
                record["sequence"] = steps;
            }
            ctx.emit(record);
        } else if (seq) {
            ctx.out << "shortest length " << seq->horizon() << '\n' << format_sequence(*seq);
        } else {
            ctx.out << "unreachable\n";
        }
        return seq ? kSuccess : kNegative;
    }
    const bool controllable = strongly_connected(graph);
    if (ctx.json_output) {
        ctx.emit({{"controllable", controllable}, {"states", graph.num_states()}, {"fan_out", graph.fan_out()}});
    } else {
        ctx.out << (controllable ? "controllable" : "not controllable") << " (state graph: "
                << graph.num_states() << " states, " << graph.fan_out() << " arcs each)\n";
    }
    return controllable ? kSuccess : kNegative;
}

int cmd_domset(const Context& ctx, const std::string& file, std::optional<std::size_t> k) {
    const auto g = parse_edge_list(read_file(file));
    const auto result = min_dominating_set(g, k, OracleLimits::from_environment());
    if (ctx.json_output) {
        ctx.emit(to_json(result));
    } else {
        std::vector<std::string> d;
        for (Vertex v : result.vertices) d.push_back(vertex_name(v));
        ctx.out << "D=" << set_text(d) << ", gamma " << result.gamma << '\n';
        if (result.decision) ctx.out << (*result.decision ? "yes" : "no") << '\n';
    }
    return result.decision && !*result.decision ? kNegative : kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Controllability analysis for conjunctive Boolean control networks", "cbnctl"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string file, from, to, seq_text, emit_path;
    bool dot = false, exact = false, greedy = false, timing = false, serial = false;
    std::optional<std::size_t> k;
    std::optional<std::uint64_t> budget;
    std::vector<std::string> pair;

    auto* check = app.add_subcommand("check", "Decide controllability of a .cbn network");
    check->add_option("file", file, ".cbn file")->required();
    check->add_flag("--dot", dot, "Print the dependency graph as DOT instead");

    auto* decompose = app.add_subcommand("decompose", "Split the dependency graph into controlled paths");
    decompose->add_option("file", file, ".cbn file")->required();

    auto* synth = app.add_subcommand("synthesize", "Build a control sequence steering --from to --to");
    synth->add_option("file", file, ".cbn file")->required();
    synth->add_option("--from", from, "Initial state, X1 first")->required();
    synth->add_option("--to", to, "Target state, X1 first")->required();

    auto* sim = app.add_subcommand("simulate", "Simulate a control sequence");
    sim->add_option("file", file, ".cbn file")->required();
    sim->add_option("--from", from, "Initial state, X1 first")->required();
    sim->add_option("--seq", seq_text, "Control vectors separated by ',' (use '-' for zero width)")
        ->required();

    auto* minimize = app.add_subcommand("minimize", "Minimum set of variables to control");
    minimize->add_option("file", file, ".cbn file")->required();
    auto* exact_flag = minimize->add_flag("--exact", exact, "Exact search (default)");
    auto* greedy_flag = minimize->add_flag("--greedy", greedy, "Greedy upper bound");
    exact_flag->excludes(greedy_flag);
    minimize->add_option("-k", k, "Decision budget (exact search only)");
    minimize->add_option("--budget", budget, "Maximum number of candidate tests");
    minimize->add_flag("--timing", timing, "Report elapsed time");
    minimize->add_flag("--serial", serial, "Use the serial reference kernel");

    auto* reduce = app.add_subcommand("reduce-ds", "Solve dominating set through minimal controllability");
    reduce->add_option("graph", file, "Edge-list graph file")->required();
    std::size_t reduce_k = 0;
    reduce->add_option("-k", reduce_k, "Dominating-set budget")->required();
    reduce->add_option("--budget", budget, "Maximum number of candidate tests");
    reduce->add_option("--emit-cbn", emit_path, "Write the reduction network to this .cbn file");

    auto* oracle = app.add_subcommand("oracle", "Brute-force state-graph ground truth");
    oracle->add_option("file", file, ".cbn file")->required();
    oracle->add_option("--pair", pair, "Shortest steering from A to B")->expected(2);
    oracle->add_flag("--dot", dot, "Print the state graph as DOT instead");

    auto* domset = app.add_subcommand("domset", "Exact minimum dominating set");
    domset->add_option("graph", file, "Edge-list graph file")->required();
    domset->add_option("-k", k, "Decision budget");

    std::vector<std::string> argv_store{"cbnctl"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }
    if (greedy && k) {
        err << "error: -k needs the exact search\n";
        return kUsage;
    }

    const Context ctx{out, format == "json"};
    try {
        if (check->parsed()) return cmd_check(ctx, file, dot);
        if (decompose->parsed()) return cmd_decompose(ctx, file);
        if (synth->parsed()) return cmd_synthesize(ctx, file, from, to);
        if (sim->parsed()) return cmd_simulate(ctx, file, from, seq_text);
        if (minimize->parsed()) return cmd_minimize(ctx, file, greedy, k, budget, timing, serial);
        if (reduce->parsed()) return cmd_reduce(ctx, file, reduce_k, budget, emit_path);
        if (oracle->parsed()) return cmd_oracle(ctx, file, pair, dot);
        if (domset->parsed()) return cmd_domset(ctx, file, k);
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kLimit;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::logic_error& e) {
        // invalid_argument derives from logic_error and signals a bad request.
        if (dynamic_cast<const std::invalid_argument*>(&e)) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        }
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace cbn::cli
