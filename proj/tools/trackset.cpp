// trackset: solve, reduce, count, verify and generate tracking-set instances.
//
// Exit codes: 0 YES / tracking, 1 NO / not tracking, 2 input error,
// 3 cap exceeded without a decision, 4 an internal or oracle check failed.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>

#include "tracking/dag.hpp"
#include "tracking/generate.hpp"
#include "tracking/io.hpp"
#include "tracking/oracle.hpp"
#include "tracking/report.hpp"
#include "tracking/set_system.hpp"
#include "tracking/shortest_paths.hpp"

namespace {

using namespace tracking;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitCheck = 4;

constexpr std::size_t kOracleCap = std::size_t{1} << 16;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

io::Instance load(const std::string& file) {
    if (file == "-") return io::parse_instance(std::cin);
    return io::read_instance_file(file);
}

std::string join(std::span<const Vertex> ids, const char* empty = "-") {
    if (ids.empty()) return empty;
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(ids[i]);
    }
    return out;
}

std::string relabel_table(const VertexRelabeling& r) {
    std::string out;
    for (Vertex v = 0; v < r.size(); ++v) {
        out += "# relabel " + std::to_string(v) + " " + std::to_string(r.original(v)) + "\n";
    }
    return out;
}

std::vector<Vertex> parse_trackers(const std::string& text, std::size_t universe) {
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    std::vector<Vertex> out;
    for (std::string tok; in >> tok;) {
        if (tok == "-") continue;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok[0] == '-') throw InputError("bad tracker id '" + tok + "'");
        if (v >= universe) {
            throw InputError("tracker " + tok + " out of range for n = " + std::to_string(universe));
        }
        out.push_back(static_cast<Vertex>(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t universe_of(const io::Instance& inst) {
    return std::visit(
        [](const auto& x) -> std::size_t {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SetSystem>) return x.universe_size();
            else return x.vertex_count();
        },
        inst);
}

// Families the oracle works on, in original ids.
std::optional<std::vector<std::vector<Vertex>>> oracle_family(const io::Instance& inst) {
    if (auto g = std::get_if<Graph>(&inst)) {
        auto e = oracle::enumerate_shortest_paths(*g, kOracleCap);
        if (e.cap_exceeded) return std::nullopt;
        return std::move(e.paths);
    }
    if (auto d = std::get_if<Digraph>(&inst)) {
        auto e = oracle::enumerate_all_paths(*d, kOracleCap);
        if (e.cap_exceeded) return std::nullopt;
        return std::move(e.paths);
    }
    return std::get<SetSystem>(inst).family();
}

std::string oracle_check(const io::Instance& inst, const SolveReport& report, std::size_t k) {
    auto family = oracle_family(inst);
    if (!family) return "skipped (more than " + std::to_string(kOracleCap) + " paths)";
    if (report.witness && !oracle::tracks(*family, report.witness->members())) {
        throw CheckFailure("oracle: witness does not track the enumerated family");
    }
    const std::size_t n = universe_of(inst);
    if (n > oracle::kMaxUniverse) {
        return report.witness ? "witness tracks all " + std::to_string(family->size()) +
                                    " members; minimality not checked (n > 20)"
                              : "skipped (n > 20)";
    }
    auto brute = oracle::brute_min_tracking(*family, n, std::min(k, n));
    if (report.verdict == Verdict::yes && (!brute || *brute != report.witness->size())) {
        throw CheckFailure("oracle: minimum size disagrees with the solver");
    }
    if (report.verdict == Verdict::no && brute) {
        throw CheckFailure("oracle: found a tracking set of size " + std::to_string(*brute));
    }
    return brute ? "agrees (minimum " + std::to_string(*brute) + ")"
                 : "agrees (none of size <= " + std::to_string(k) + ")";
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::yes: return kExitYes;
        case Verdict::no: return kExitNo;
        case Verdict::undecided: return kExitUndecided;
    }
    return kExitUndecided;
}

struct SolveArgs {
    std::string file;
    std::size_t k = 0;
    std::string mode = "auto";
    std::string route = "hitting";
    std::optional<std::uint64_t> cap;
    bool verify = false;
    bool json = false;
    unsigned threads = 1;
};

int cmd_solve(const SolveArgs& a) {
    const auto inst = load(a.file);
    const auto kind = io::kind_of(inst);
    std::string mode = a.mode;
    if (mode == "auto") {
        mode = kind == io::InstanceKind::graph ? "shortest"
               : kind == io::InstanceKind::dag ? "dag"
                                               : "setsystem";
    }

    SolveReport report;
    if (mode == "shortest") {
        if (kind != io::InstanceKind::graph) throw InputError("mode shortest needs a graph file");
        ShortestPathOptions opt;
        opt.threads = a.threads;
        report = solve_shortest_paths(std::get<Graph>(inst), a.k, opt);
    } else if (mode == "dag") {
        if (kind != io::InstanceKind::dag) throw InputError("mode dag needs a dag file");
        DagSolveOptions opt;
        opt.threads = a.threads;
        report = solve_dag(std::get<Digraph>(inst), a.k, opt);
    } else if (kind == io::InstanceKind::graph) {
        report = solve_shortest_paths_by_set_system(std::get<Graph>(inst), a.k, a.cap);
    } else if (kind == io::InstanceKind::setsystem) {
        const auto& sys = std::get<SetSystem>(inst);
        report = a.route == "subsets" ? solve_tracking_set_by_subsets(sys, a.k)
                                      : solve_tracking_set(sys, a.k);
    } else {
        throw InputError("mode setsystem needs a graph or setsystem file");
    }

    std::optional<std::string> oracle_line;
    if (a.verify) oracle_line = oracle_check(inst, report, a.k);

    if (a.json) {
        auto doc = nlohmann::ordered_json::parse(to_json(report));
        if (oracle_line) doc["oracle"] = *oracle_line;
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << to_text(report);
        if (oracle_line) std::cout << "oracle: " << *oracle_line << '\n';
    }
    return exit_for(report.verdict);
}

int cmd_reduce(const std::string& file, const std::string& mode) {
    const auto inst = load(file);
    if (auto g = std::get_if<Graph>(&inst)) {
        if (mode != "auto" && mode != "shortest" && mode != "dag") {
            throw InputError("mode " + mode + " does not apply to a graph file");
        }
        auto rule1 = reduce_rule_1(*g);
        if (!rule1) {
            std::cout << "# no s-t path; only s and t are kept\n"
                      << io::write_graph(Graph(2, {}, 0, 1))
                      << relabel_table(VertexRelabeling({g->source(), g->sink()}));
            return kExitYes;
        }
        if (mode != "dag") {
            std::cout << io::write_graph(rule1->layered.base) << relabel_table(rule1->relabeling);
            return kExitYes;
        }
        auto reduced = reduce_dag(to_dag(rule1->layered));
        if (reduced.shape == DagShape::singleton) {
            std::cout << "# singleton: one s-t path; the empty set tracks it\n";
        }
        std::cout << io::write_dag(reduced.base)
                  << relabel_table(rule1->relabeling.compose(reduced.relabeling));
        return kExitYes;
    }
    if (auto d = std::get_if<Digraph>(&inst)) {
        if (mode != "auto" && mode != "dag") throw InputError("mode " + mode + " does not apply to a dag file");
        auto reduced = reduce_dag(*d);
        if (reduced.shape == DagShape::singleton) {
            std::cout << "# singleton: one s-t path; the empty set tracks it\n";
        } else if (reduced.shape == DagShape::no_path) {
            std::cout << "# no s-t path; only s and t are kept\n";
        }
        std::cout << io::write_dag(reduced.base) << relabel_table(reduced.relabeling);
        return kExitYes;
    }
    if (mode != "auto" && mode != "setsystem") {
        throw InputError("mode " + mode + " does not apply to a setsystem file");
    }
    auto kernel = kernelize_elements(std::get<SetSystem>(inst));
    std::cout << io::write_set_system(kernel.system)
              << relabel_table(VertexRelabeling(kernel.source_element));
    return kExitYes;
}

int cmd_count(const std::string& file, std::optional<std::uint64_t> cap) {
    const auto inst = load(file);
    std::optional<BigCount> big_cap;
    if (cap) big_cap = BigCount(*cap);

    PathCount count;
    if (auto g = std::get_if<Graph>(&inst)) {
        auto rule1 = reduce_rule_1(*g);
        if (rule1) count = count_paths(to_dag(rule1->layered), big_cap);
    } else if (auto d = std::get_if<Digraph>(&inst)) {
        count = count_paths(*d, big_cap);
    } else {
        const std::size_t m = std::get<SetSystem>(inst).set_count();
        count.value = m;
        if (cap && m > *cap) count = {BigCount(*cap), true};
    }
    if (count.saturated) {
        std::cout << '>' << count.value << '\n';
        return kExitUndecided;
    }
    std::cout << count.value << '\n';
    return kExitYes;
}

struct TrackCheck {
    bool tracks = true;
    std::vector<std::string> evidence;
};

TrackCheck verify_on_dag(const Digraph& d, const VertexRelabeling& to_original,
                       std::span<const Vertex> trackers_original) {
    std::vector<Vertex> local;
    for (Vertex v = 0; v < to_original.size(); ++v) {
        if (std::binary_search(trackers_original.begin(), trackers_original.end(),
                               to_original.original(v))) {
            local.push_back(v);
        }
    }
    TrackingVerifier verifier(d);
    auto bad = verifier.violating_paths(local);
    if (!bad) return {};
    return {false,
            {"path: " + join(to_original.map_sequence(bad->first)),
             "path: " + join(to_original.map_sequence(bad->second))}};
}

int cmd_verify(const std::string& file, const std::string& tracker_text, bool with_oracle) {
    const auto inst = load(file);
    const auto trackers = parse_trackers(tracker_text, universe_of(inst));

    TrackCheck result;
    if (auto g = std::get_if<Graph>(&inst)) {
        if (auto rule1 = reduce_rule_1(*g)) {
            result = verify_on_dag(to_dag(rule1->layered), rule1->relabeling, trackers);
        }
    } else if (auto d = std::get_if<Digraph>(&inst)) {
        if (count_paths(*d, BigCount(1)).value > 0) {
            auto pruned = reduce_rule_2(*d);
            result = verify_on_dag(pruned.dag, pruned.relabeling, trackers);
        }
    } else {
        const auto& sys = std::get<SetSystem>(inst);
        std::vector<std::pair<ElementSet, std::size_t>> traces;
        for (std::size_t i = 0; i < sys.set_count(); ++i) {
            ElementSet trace;
            std::set_intersection(sys.set(i).begin(), sys.set(i).end(), trackers.begin(),
                                  trackers.end(), std::back_inserter(trace));
            traces.emplace_back(std::move(trace), i);
        }
        std::sort(traces.begin(), traces.end());
        for (std::size_t i = 0; i + 1 < traces.size(); ++i) {
            if (traces[i].first == traces[i + 1].first) {
                result = {false,
                          {"set " + std::to_string(traces[i].second) + ": " +
                               join(sys.set(traces[i].second)),
                           "set " + std::to_string(traces[i + 1].second) + ": " +
                               join(sys.set(traces[i + 1].second))}};
                break;
            }
        }
    }

    std::cout << "trackers: " << join(trackers) << '\n';
    std::cout << "tracking: " << (result.tracks ? "yes" : "no") << '\n';
    for (const auto& line : result.evidence) std::cout << line << '\n';
    if (with_oracle) {
        auto family = oracle_family(inst);
        if (!family) {
            std::cout << "oracle: skipped (more than " << kOracleCap << " paths)\n";
        } else if (oracle::tracks(*family, trackers) != result.tracks) {
            throw CheckFailure("oracle: definition-level check disagrees");
        } else {
            std::cout << "oracle: agrees over " << family->size() << " members\n";
        }
    }
    return result.tracks ? kExitYes : kExitNo;
}

struct GenArgs {
    std::string kind;
    std::uint64_t seed = 1;
    std::size_t n = 8;
    double p = 0.3;
    std::size_t levels = 3;
    std::size_t width = 3;
    std::size_t m = 6;
    std::size_t r = 3;
};

int cmd_gen(const GenArgs& a) {
    gen::Rng rng(a.seed);
    io::Instance inst = [&]() -> io::Instance {
        if (a.kind == "graph") return gen::random_connected_graph(rng, a.n, a.p);
        if (a.kind == "layered") return gen::random_layered_graph(rng, a.levels, a.width, a.p);
        if (a.kind == "dag") return gen::random_dag(rng, a.n, a.p);
        if (a.kind == "st-dag") return gen::random_st_dag(rng, a.n, a.p);
        if (a.kind == "reduced-dag") return gen::random_reduced_dag(rng, a.n, a.p);
        if (a.kind == "setsystem") return gen::random_set_system(rng, a.n, a.m, a.p);
        if (a.kind == "diamonds") return gen::serial_diamonds(a.r);
        if (a.kind == "diamonds-dag") return gen::serial_diamonds_dag(a.r);
        if (a.kind == "diameter-two") return gen::diameter_two(a.r);
        return gen::ladder_dag(a.r);
    }();
    std::cout << io::write_instance(inst);
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tracking sets for shortest paths, DAG paths and set systems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "trackset 0.1.0");

    unsigned threads = 1;
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", threads, "Worker threads for the subset scan")
            ->check(CLI::Range(1u, 256u));
    };
    const std::vector<std::string> modes{"auto", "shortest", "dag", "setsystem"};

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Decide whether a tracking set of size <= k exists");
    solve_cmd->add_option("file", solve.file, "Instance file, '-' for stdin")->required();
    solve_cmd->add_option("-k,--k", solve.k, "Size budget")->required();
    solve_cmd->add_option("--mode", solve.mode, "shortest | dag | setsystem")
        ->check(CLI::IsMember(modes));
    solve_cmd->add_option("--route", solve.route, "Set-system route: hitting | subsets")
        ->check(CLI::IsMember({"hitting", "subsets"}));
    solve_cmd->add_option("--cap", solve.cap, "Path enumeration cap for the set-system route");
    solve_cmd->add_flag("--verify", solve.verify, "Cross-check the answer with the brute-force oracle");
    solve_cmd->add_flag("--json", solve.json, "Emit a flat JSON report");
    add_threads(solve_cmd);

    std::string file;
    std::string reduce_mode = "auto";
    auto* reduce_cmd = app.add_subcommand("reduce", "Print the reduced instance and relabeling");
    reduce_cmd->add_option("file", file, "Instance file, '-' for stdin")->required();
    reduce_cmd->add_option("--mode", reduce_mode, "shortest | dag | setsystem")
        ->check(CLI::IsMember(modes));
    add_threads(reduce_cmd);

    std::optional<std::uint64_t> count_cap;
    auto* count_cmd = app.add_subcommand("count", "Count s-t paths (shortest paths for graphs)");
    count_cmd->add_option("file", file, "Instance file, '-' for stdin")->required();
    count_cmd->add_option("--cap", count_cap, "Stop counting above this value");
    add_threads(count_cmd);

    std::string trackers;
    bool with_oracle = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check a tracker set");
    verify_cmd->add_option("file", file, "Instance file, '-' for stdin")->required();
    verify_cmd->add_option("--trackers", trackers, "Tracker ids, comma or space separated")
        ->required();
    verify_cmd->add_flag("--oracle", with_oracle, "Repeat the check by path enumeration");
    add_threads(verify_cmd);

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated instance");
    gen_cmd->add_option("kind", gen_args.kind)
        ->required()
        ->check(CLI::IsMember({"graph", "layered", "dag", "st-dag", "reduced-dag", "setsystem", "diamonds",
                               "diamonds-dag", "diameter-two", "ladder"}));
    gen_cmd->add_option("--seed", gen_args.seed);
    gen_cmd->add_option("--n", gen_args.n, "Vertices, or universe size for setsystem")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    gen_cmd->add_option("--p", gen_args.p, "Edge, arc or element probability")
        ->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--levels", gen_args.levels);
    gen_cmd->add_option("--width", gen_args.width)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--m", gen_args.m, "Number of sets");
    gen_cmd->add_option("--r", gen_args.r, "Diamonds, middle vertices or ladder rungs")
        ->check(CLI::PositiveNumber);
    add_threads(gen_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    solve.threads = threads;
    try {
        if (*solve_cmd) return cmd_solve(solve);
        if (*reduce_cmd) return cmd_reduce(file, reduce_mode);
        if (*count_cmd) return cmd_count(file, count_cap);
        if (*verify_cmd) return cmd_verify(file, trackers, with_oracle);
        return cmd_gen(gen_args);
    } catch (const io::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitInput;
    } catch (const CheckFailure& e) {
        std::cerr << e.what() << '\n';
        return kExitCheck;
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitInput;
        }
        std::cerr << "internal check failed: " << e.what() << '\n';
        return kExitCheck;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
