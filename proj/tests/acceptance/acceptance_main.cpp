// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1). argv[1] is the trackset binary.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tracking/dag.hpp"
#include "tracking/generate.hpp"
#include "tracking/oracle.hpp"
#include "tracking/set_system.hpp"
#include "tracking/shortest_paths.hpp"

using namespace tracking;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;
using Family = std::vector<std::vector<Vertex>>;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Every YES answer seen by any criterion, checked against ⌈lg m⌉.
struct GateLedger {
    std::size_t answers = 0;
    std::size_t below_bound = 0;

    void record(const SolveReport& r, std::size_t family_size) {
        if (r.verdict != Verdict::yes) return;
        ++answers;
        if (r.witness->size() < tracking_lower_bound(family_size)) ++below_bound;
    }
} gate;

Family shortest_family(const Graph& g) { return oracle::enumerate_shortest_paths(g, 1u << 20).paths; }
Family dag_family(const Digraph& d) { return oracle::enumerate_all_paths(d, 1u << 20).paths; }

std::size_t brute_min(const Family& f, std::size_t universe) {
    return *oracle::brute_min_tracking(f, universe, universe);
}

std::vector<SetSystem> criterion_set_systems() {
    gen::Rng rng(2002);
    std::vector<SetSystem> out;
    while (out.size() < 500) {
        const std::size_t n = rng.between(1, 10);
        const std::size_t m = rng.between(1, std::min<std::size_t>(8, std::size_t{1} << n));
        out.push_back(gen::random_set_system(rng, n, m, 0.2 + 0.6 * rng.unit()));
    }
    return out;
}

std::vector<Vertex> random_subset(gen::Rng& rng, std::size_t n) {
    std::vector<Vertex> t;
    for (Vertex v = 0; v < n; ++v) {
        if (rng.chance(0.5)) t.push_back(v);
    }
    return t;
}

Outcome oracle_agreement_graphs() {
    gen::Rng rng(1001);
    const auto start = Clock::now();
    std::size_t mismatches = 0, paths = 0, largest_min = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = rng.between(4, 12);
        auto g = gen::random_connected_graph(rng, n, 0.15 + 0.45 * rng.unit());
        auto family = shortest_family(g);
        auto r = solve_shortest_paths(g, n);
        gate.record(r, family.size());
        const std::size_t expected = brute_min(family, n);
        paths += family.size();
        largest_min = std::max(largest_min, expected);
        if (r.verdict != Verdict::yes || r.witness->size() != expected ||
            !oracle::tracks(family, r.witness->members())) {
            ++mismatches;
        }
    }
    const double secs = seconds_since(start);
    return {mismatches == 0 && secs < 60.0,
            "500 graphs (" + std::to_string(paths) + " shortest paths, minimum up to " +
                std::to_string(largest_min) + "), " + std::to_string(mismatches) +
                " mismatches, " + std::to_string(secs) + " s (limit 60 s)"};
}

Outcome oracle_agreement_set_systems() {
    std::size_t mismatches = 0, decisions = 0;
    for (const auto& sys : criterion_set_systems()) {
        for (std::size_t k = 0; k <= 5; ++k) {
            auto brute = oracle::brute_min_tracking(sys.family(), sys.universe_size(), k);
            for (auto r : {solve_tracking_set(sys, k), solve_tracking_set_by_subsets(sys, k)}) {
                ++decisions;
                gate.record(r, sys.set_count());
                if ((r.verdict == Verdict::yes) != brute.has_value()) ++mismatches;
            }
        }
    }
    return {mismatches == 0, std::to_string(decisions) + " decisions (2 routes, k = 0..5), " +
                                 std::to_string(mismatches) + " mismatches"};
}

Outcome hitting_equivalence() {
    gen::Rng rng(3003);
    std::size_t counterexamples = 0, checks = 0;
    for (const auto& sys : criterion_set_systems()) {
        auto h = reduce_to_hitting(sys);
        for (int i = 0; i < 1000; ++i) {
            TrackerSet t(random_subset(rng, sys.universe_size()));
            ++checks;
            if (oracle::tracks(sys.family(), t.members()) != hits_all(h, t)) ++counterexamples;
        }
    }
    return {counterexamples == 0, std::to_string(checks) + " subsets over 500 systems, " +
                                      std::to_string(counterexamples) + " counterexamples"};
}

Outcome verifier_equivalence() {
    gen::Rng rng(4004);
    std::size_t counterexamples = 0, dags = 0;
    while (dags < 500) {
        auto d = gen::random_reduced_dag(rng, rng.between(4, 12), 0.3 * rng.unit());
        if (d.vertex_count() > 10) continue;
        ++dags;
        auto family = dag_family(d);
        for (int i = 0; i < 20; ++i) {
            auto t = random_subset(rng, d.vertex_count());
            if (verify_tracking_condition(d, TrackerSet(t)) != oracle::tracks(family, t)) {
                ++counterexamples;
            }
        }
    }
    return {counterexamples == 0,
            "500 reduced DAGs x 20 subsets, " + std::to_string(counterexamples) + " counterexamples"};
}

Outcome path_count_bounds() {
    gen::Rng rng(5005);
    std::size_t violations = 0, dags = 0, largest = 0, total_n = 0;
    while (dags < 1000) {
        const std::size_t raw = rng.between(4, 150);
        auto d = gen::random_reduced_dag(rng, raw, 2.0 * rng.unit() / raw);
        if (d.vertex_count() > 100) continue;
        ++dags;
        largest = std::max(largest, d.vertex_count());
        total_n += d.vertex_count();
        const BigCount paths = count_paths(d).value;
        BigCount degree_bound = 1;
        for (Vertex v = 0; v < d.vertex_count(); ++v) {
            if (v != d.sink()) degree_bound += BigCount(d.out_degree(v)) - 1;
        }
        if (paths < degree_bound || 5 * paths < d.vertex_count()) ++violations;
    }
    return {violations == 0, "1000 reduced DAGs (mean n " + std::to_string(total_n / 1000) +
                                 ", max n " + std::to_string(largest) + "), " +
                                 std::to_string(violations) + " violations"};
}

Outcome diameter_two_law() {
    std::vector<std::string> bad;
    for (std::size_t r = 1; r <= 8; ++r) {
        auto g = gen::diameter_two(r);
        auto family = shortest_family(g);
        auto at = solve_shortest_paths(g, r - 1);
        gate.record(at, family.size());
        bool ok = at.verdict == Verdict::yes && at.witness->size() == r - 1 &&
                  brute_min(family, g.vertex_count()) == r - 1;
        if (r > 1) ok = ok && solve_shortest_paths(g, r - 2).verdict == Verdict::no;
        if (!ok) bad.push_back(std::to_string(r));
    }
    std::string detail = "r = 1..8, minimum r-1 in every case";
    if (!bad.empty()) {
        detail = "wrong minimum for r in {";
        for (const auto& b : bad) detail += " " + b;
        detail += " }";
    }
    return {bad.empty(), detail};
}

Outcome reduction_safety() {
    gen::Rng rng(8008);
    std::size_t violations = 0;
    for (int i = 0; i < 250; ++i) {
        auto g = gen::random_connected_graph(rng, rng.between(3, 12), 0.1 + 0.4 * rng.unit());
        const std::size_t before = brute_min(shortest_family(g), g.vertex_count());
        auto rule1 = reduce_rule_1(g);
        const auto& lg = rule1->layered;
        const std::size_t after1 = brute_min(shortest_family(lg.base), lg.base.vertex_count());
        auto reduced = reduce_dag(to_dag(lg));
        const std::size_t after4 = brute_min(dag_family(reduced.base), reduced.base.vertex_count());
        if (before != after1 || before != after4) ++violations;
    }
    for (int i = 0; i < 250; ++i) {
        auto d = gen::random_dag(rng, rng.between(2, 12), 0.15 + 0.4 * rng.unit());
        const std::size_t before = brute_min(dag_family(d), d.vertex_count());
        auto r2 = reduce_rule_2(d);
        const std::size_t after2 = brute_min(dag_family(r2.dag), r2.dag.vertex_count());
        auto reduced = reduce_dag(d);
        const std::size_t after = brute_min(dag_family(reduced.base), reduced.base.vertex_count());
        if (before != after2 || before != after) ++violations;
    }
    return {violations == 0, "250 graphs (rule 1, then rules 2-4) and 250 DAGs (rules 2-4), " +
                                 std::to_string(violations) + " violations"};
}

// Ladder with 25 rungs (78 vertices) plus two subdivided s-t arcs: a reduced
// DAG with exactly 80 vertices and 29 paths.
Digraph reduced_dag_of_80() {
    const auto ladder = gen::ladder_dag(25);
    const Vertex n = static_cast<Vertex>(ladder.vertex_count());
    auto arcs = ladder.arcs();
    const Vertex s = ladder.source(), t = ladder.sink();
    for (Vertex w : {n, n + 1}) {
        arcs.push_back({s, w});
        arcs.push_back({w, t});
    }
    return Digraph(n + 2, std::move(arcs), s, t);
}

Outcome scaling_smoke() {
    constexpr std::size_t k = 4;
    auto d = reduced_dag_of_80();
    const bool reduced = reduce_dag(d).stats.total() == 0;
    auto start = Clock::now();
    auto r = solve_dag(d, k);
    const double secs = seconds_since(start);
    gate.record(r, 0);
    const bool gated = r.verdict == Verdict::no && r.stats.subsets_tried == 0;
    const bool scanned = r.stats.subsets_tried > 0 && secs < 120.0;
    std::string detail = "n = " + std::to_string(d.vertex_count()) + ", k = 4: " +
                         to_string(r.verdict) + " (" + r.reason + ") in " + std::to_string(secs) +
                         " s";

    // A reduced DAG under both gates, to exercise the full scan at k = 4.
    auto ladder = gen::ladder_dag(14);
    start = Clock::now();
    DagSolveOptions opt;
    opt.threads = 1;
    auto full = solve_dag(ladder, k, opt);
    const double full_secs = seconds_since(start);
    gate.record(full, 16);
    const bool full_ok = full.stats.subsets_tried > 0 && full_secs < 120.0;
    detail += "; full scan n = " + std::to_string(ladder.vertex_count()) + ": " +
              std::to_string(full.stats.subsets_tried) + " subsets in " +
              std::to_string(full_secs) + " s";
    return {d.vertex_count() == 80 && reduced && (gated || scanned) && full_ok, detail};
}

struct Capture {
    int status;
    std::string out;
};

Capture capture(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_determinism(const std::string& trackset) {
    if (trackset.empty()) return {false, "trackset path not given"};
    const fs::path dir = fs::temp_directory_path() / "trackset_acceptance";
    fs::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& gen_args) {
        const auto path = (dir / name).string();
        std::ofstream(path) << capture(trackset + " gen " + gen_args).out;
        return path;
    };
    const auto graph = write("graph.txt", "graph --n 12 --p 0.3 --seed 7");
    const auto dag = write("dag.txt", "dag --n 16 --p 0.3 --seed 7");
    const auto ladder = write("ladder.txt", "ladder --r 10");
    const auto sets = write("sets.txt", "setsystem --n 8 --m 7 --seed 7");

    const std::vector<std::string> commands{
        "solve " + graph + " --k 4",
        "solve " + graph + " --k 4 --json --verify",
        "solve " + graph + " --k 6 --mode setsystem",
        "solve " + dag + " --k 4",
        "solve " + ladder + " --k 4 --json",
        "solve " + sets + " --k 3",
        "solve " + sets + " --k 3 --route subsets",
        "reduce " + graph,
        "reduce " + graph + " --mode dag",
        "reduce " + dag,
        "reduce " + sets,
        "count " + graph,
        "count " + dag,
        "verify " + dag + " --trackers 1,2,3 --oracle",
        "verify " + sets + " --trackers 0,1,2",
        "gen reduced-dag --n 30 --seed 9",
    };
    std::size_t differing = 0;
    for (const auto& c : commands) {
        std::vector<Capture> runs;
        for (const char* threads : {"1", "1", "8", "8"}) {
            runs.push_back(capture(trackset + " " + c + " --threads " + threads));
        }
        for (const auto& r : runs) {
            if (r.out != runs.front().out || r.status != runs.front().status) {
                ++differing;
                std::cerr << "nondeterministic: " << c << '\n';
                break;
            }
        }
    }
    fs::remove_all(dir);
    return {differing == 0, std::to_string(commands.size()) +
                                " commands x 2 runs x threads {1, 8}, " +
                                std::to_string(differing) + " differing"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string trackset = argc > 1 ? argv[1] : "";
    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> criteria{
        {1, "oracle agreement (graphs)", oracle_agreement_graphs},
        {2, "oracle agreement (set systems)", oracle_agreement_set_systems},
        {3, "tracking iff hitting the symmetric differences", hitting_equivalence},
        {4, "tracking condition equals path-intersection check", verifier_equivalence},
        {5, "path count lower bounds", path_count_bounds},
        {7, "diameter-2 law", diameter_two_law},
        {8, "reduction safety", reduction_safety},
        {9, "scaling smoke test", scaling_smoke},
        {10, "CLI determinism", [&] { return cli_determinism(trackset); }},
    };

    std::vector<std::pair<int, std::string>> lines;
    int failed = 0;
    auto report = [&](int id, const char* name, const Outcome& o) {
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << name << " - "
             << o.detail;
        lines.emplace_back(id, line.str());
        if (!o.pass) ++failed;
    };
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        report(c.id, c.name, o);
    }
    report(6, "lower-bound gate never undercut",
           {gate.below_bound == 0, std::to_string(gate.answers) + " YES answers across criteria 1, 2, 7, 9, " +
                                       std::to_string(gate.below_bound) + " below ⌈lg m⌉"});

    std::sort(lines.begin(), lines.end());
    for (const auto& [id, line] : lines) std::cout << line << '\n';
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << 10 - failed << "/10\n";
    return failed ? 1 : 0;
}
