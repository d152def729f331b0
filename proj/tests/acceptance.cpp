// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// gating failure. Criterion 9 (parallel speedup) is informational.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <vector>

#include "ccg/cli.hpp"
#include "ccg/cluster.hpp"
#include "ccg/cover.hpp"
#include "ccg/cut.hpp"
#include "ccg/embed.hpp"
#include "ccg/oracle.hpp"
#include "ccg/packing.hpp"
#include "support.hpp"

using namespace ccg;
using namespace ccg::testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
u64 witnesses_checked = 0;
u64 witnesses_failed = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool pass, const std::string& detail, bool gating = true) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : (gating ? "FAIL" : "INFO-FAIL"),
                criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass && gating) ++failures;
}

void note_witness(bool ok) {
    ++witnesses_checked;
    if (!ok) ++witnesses_failed;
}

// --- criterion 1+2: family coverage and size bounds -------------------------

void criteria_family() {
    auto start = Clock::now();
    bool covered_all = true;
    bool bounds_ok = true;
    bool formula_ok = true;
    std::string multipliers;
    for (u32 n : {4u, 6u, 8u, 12u}) {
        for (u32 k = 1; k <= 3; ++k) {
            for (u32 c = 1; c <= 3; ++c) {
                if (k > n) continue;
                u32 used_mult = 0;
                for (u32 mult : {1u, 2u, 3u}) {
                    FamilyParams params = family_params(n, k, c, mult);
                    if (verify_family(params).covered) {
                        used_mult = mult;
                        break;
                    }
                }
                if (used_mult == 0) {
                    covered_all = false;
                    continue;
                }
                if (used_mult > 1)
                    multipliers += " (" + std::to_string(n) + "," + std::to_string(k) + "," +
                                   std::to_string(c) + ")->x" + std::to_string(used_mult);
                FamilyParams params = family_params(n, k, c, used_mult);
                u64 size = family_size(params);
                // construction size bound: c^(k^2) * k^4 * ceil(log2 n)^2 * mult^2
                u64 log2n = 0;
                while ((u64{1} << log2n) < n) ++log2n;
                u64 bound = 1;
                for (u32 i = 0; i < k * k; ++i) bound *= c;
                bound *= static_cast<u64>(k) * k * k * k * log2n * log2n * used_mult * used_mult;
                if (size > bound) bounds_ok = false;
                // exact count: blocks each contribute c^(k^2) members
                u64 per_block = 1;
                for (u32 i = 0; i < k * k; ++i) per_block *= c;
                u64 by_blocks = 0;
                for (u64 b = 0; b < block_count(params); ++b) by_blocks += per_block;
                if (by_blocks != size) formula_ok = false;
                // enumerate members fully when cheap
                if (size <= 20000) {
                    u64 enumerated = 0;
                    for (u64 i = 0; i < size; ++i) {
                        Coloring coloring = get_coloring(params, i);
                        if (coloring.values.size() != n) formula_ok = false;
                        ++enumerated;
                    }
                    if (enumerated != size) formula_ok = false;
                }
            }
        }
    }
    double secs = seconds_since(start);
    report(1, covered_all && secs < 120.0,
           "family coverage on the (n,k,c) grid in " + std::to_string(secs) + "s" +
               (multipliers.empty() ? std::string(", multiplier 1 throughout")
                                    : ", multipliers:" + multipliers));
    report(2, bounds_ok && formula_ok,
           "family size bound and exact block-sum count on the grid");
}

// --- criterion 3: embedding oracle equivalence ------------------------------

void criterion_embed() {
    auto start = Clock::now();
    std::vector<std::pair<const char*, Pattern>> patterns;
    patterns.push_back({"K2", build_pattern(PatternSpec::copies_of(clique_graph(2), 1))});
    patterns.push_back({"P3", build_pattern(PatternSpec::paths_of(1, 3))});
    patterns.push_back({"P4", build_pattern(PatternSpec::paths_of(1, 4))});
    patterns.push_back({"K3", build_pattern(PatternSpec::copies_of(clique_graph(3), 1))});
    patterns.push_back({"C4", build_pattern(PatternSpec::cycles_of(1, 4))});
    patterns.push_back({"2K2", build_pattern(PatternSpec::copies_of(clique_graph(2), 2))});

    std::mt19937 rng(2026);
    std::vector<Graph> hosts;
    for (int i = 0; i < 200; ++i) hosts.push_back(random_graph(6, 0.5, rng));
    for (int i = 0; i < 120; ++i) hosts.push_back(random_graph(6, 0.25, rng));
    for (int i = 0; i < 80; ++i) hosts.push_back(random_graph(6, 0.75, rng));
    for (int i = 0; i < 60; ++i) hosts.push_back(random_graph(5, 0.5, rng));
    for (int i = 0; i < 40; ++i) hosts.push_back(random_graph(4, 0.5, rng));

    u64 disagreements = 0;
    u64 cases = 0;
    for (const auto& host : hosts) {
        for (const auto& [name, pattern] : patterns) {
            ++cases;
            bool expected = oracle::embed(pattern.h, host).has_value();
            EmbedResult got = embed(pattern, host);
            if (got.found != expected) ++disagreements;
            if (got.found) note_witness(!check_embedding(pattern.h, host, *got.witness));
        }
    }
    double secs = seconds_since(start);
    report(3, disagreements == 0 && secs < 300.0,
           std::to_string(hosts.size()) + " hosts x 6 patterns (" + std::to_string(cases) +
               " cases), " + std::to_string(disagreements) + " disagreements, " +
               std::to_string(secs) + "s");
}

// --- criterion 4: covering ---------------------------------------------------

void criterion_cover() {
    std::mt19937 rng(33);
    std::vector<Graph> corpus;
    for (u32 n = 1; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n))
            if (is_connected(g)) corpus.push_back(g);
    for (int i = 0; i < 120; ++i) corpus.push_back(random_connected_graph(7, 0.32, rng));
    for (int i = 0; i < 120; ++i) corpus.push_back(random_connected_graph(8, 0.28, rng));
    corpus.push_back(star_graph(7));
    corpus.push_back(cycle_graph(8));
    corpus.push_back(clique_graph(8));

    u64 disagreements = 0;
    bool residual_ok = true;
    for (const auto& g : corpus) {
        for (u64 k = 0; k <= 3; ++k) {
            Kernel kernel = buss_kernel(g, k);
            if (kernel.verdict == Kernel::Verdict::kernelized &&
                kernel.residual.vertex_count() > k * (k + 1))
                residual_ok = false;
            bool expected = oracle::vertex_cover(g, k).has_value();
            CoverResult got = vertex_cover(g, k);
            if (got.found != expected) ++disagreements;
            if (got.found)
                note_witness(!check_cover(g, *got.witness, CoverMode::all_edges, k, 0));
        }
        for (u64 k = 1; k <= 3; ++k)
            for (u64 t = 1; t <= 4; ++t) {
                bool expected = oracle::partial_vertex_cover(g, k, t).has_value();
                CoverResult got = partial_vertex_cover(g, k, t);
                if (got.found != expected) ++disagreements;
                if (got.found)
                    note_witness(!check_cover(g, *got.witness, CoverMode::at_least, k, t));
            }
        for (u64 t = 0; t <= 4; ++t) {
            bool expected = oracle::exact_partial_vertex_cover(g, t).has_value();
            CoverResult got = exact_partial_vertex_cover(g, t);
            if (got.found != expected) ++disagreements;
            if (got.found)
                note_witness(!check_cover(g, *got.witness, CoverMode::exactly, 0, t));
        }
    }
    report(4, disagreements == 0 && residual_ok,
           "covering on " + std::to_string(corpus.size()) + " connected graphs <= 8 vertices, " +
               std::to_string(disagreements) + " disagreements" +
               (residual_ok ? ", residual bound held" : ", residual bound BROKEN"));
}

// --- criterion 5: clustering -------------------------------------------------

void criterion_cluster() {
    std::mt19937 rng(55);
    std::vector<Graph> corpus;
    for (u32 n = 1; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) corpus.push_back(g);
    for (int i = 0; i < 50; ++i) corpus.push_back(random_graph(7, 0.4, rng));
    corpus.push_back(disjoint_union(path_graph(3), clique_graph(5)));
    corpus.push_back(disjoint_union(clique_graph(3), clique_graph(3)));

    u64 disagreements = 0;
    for (const auto& g : corpus) {
        for (u64 k = 0; k <= 3; ++k) {
            for (u32 l = 1; l <= 3; ++l) {
                bool expected = oracle::cluster_editing(g, k, l).has_value();
                ClusterResult got = cluster_editing(g, k, l);
                if (got.found != expected) ++disagreements;
                if (got.found) note_witness(!check_cluster_solution(g, *got.witness, k, l));
                ClusterResult freel = cluster_editing_free_l(g, k, l);
                if (freel.found != expected) ++disagreements;
                if (freel.found) note_witness(!check_cluster_solution(g, *freel.witness, k, l));
            }
            bool expected_many = oracle::cluster_editing(g, k, std::nullopt).has_value();
            ClusterResult many = many_cluster_editing(g, k);
            if (many.found != expected_many) ++disagreements;
            if (many.found)
                note_witness(!check_cluster_solution(g, *many.witness, k, std::nullopt));
            for (u32 p = 1; p <= 3; ++p) {
                bool expected = oracle::p_partite_editing(g, k, p).has_value();
                for (bool flag : {true, false}) {
                    PartiteResult got = p_partite_editing(g, k, p, flag);
                    if (got.found != expected) ++disagreements;
                    if (got.found) {
                        std::vector<u32> everything;
                        for (u32 v = 1; v <= g.vertex_count(); ++v) everything.push_back(v);
                        note_witness(
                            is_complete_multipartite(apply_edits(g, *got.witness), everything, p));
                    }
                }
            }
        }
    }

    // multipartite on a smaller grid (every sorted parts sequence, l <= 3)
    std::vector<std::vector<u32>> seqs;
    for (u32 a = 1; a <= 3; ++a) {
        seqs.push_back({a});
        for (u32 b = a; b <= 3; ++b) {
            seqs.push_back({a, b});
            for (u32 c = b; c <= 3; ++c) seqs.push_back({a, b, c});
        }
    }
    std::vector<Graph> mp_corpus;
    for (u32 n = 1; n <= 5; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) mp_corpus.push_back(g);
    for (int i = 0; i < 30; ++i) mp_corpus.push_back(random_graph(6, 0.5, rng));
    mp_corpus.push_back(disjoint_union(cycle_graph(4), clique_graph(3)));
    for (const auto& g : mp_corpus) {
        for (u64 k = 0; k <= 3; ++k)
            for (const auto& parts : seqs) {
                bool expected = oracle::multipartite_cluster_editing(g, k, parts).has_value();
                ClusterResult got = multipartite_cluster_editing(g, k, parts);
                if (got.found != expected) ++disagreements;
                if (got.found)
                    note_witness(
                        !check_cluster_solution(g, *got.witness, k, parts.size(), parts));
            }
    }
    report(5, disagreements == 0,
           "all five cluster operations, " + std::to_string(corpus.size()) + "+" +
               std::to_string(mp_corpus.size()) + " graphs, " + std::to_string(disagreements) +
               " disagreements");
}

// --- criterion 6: cutting ----------------------------------------------------

void criterion_cut() {
    std::mt19937 rng(66);
    std::vector<Graph> corpus;
    for (u32 n = 1; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) corpus.push_back(g);
    for (int i = 0; i < 80; ++i) corpus.push_back(random_graph(7, 0.3, rng));
    for (int i = 0; i < 80; ++i) corpus.push_back(random_graph(8, 0.25, rng));
    for (int i = 0; i < 80; ++i) corpus.push_back(random_graph(9, 0.22, rng));
    // fixture whose only valid X at k=0 is two isolated vertices
    Graph fixture = disjoint_union(empty_graph(2), clique_graph(4));
    corpus.push_back(fixture);

    u64 disagreements = 0;
    for (const auto& g : corpus) {
        std::vector<std::optional<u32>> terminals{std::nullopt};
        if (g.vertex_count() >= 2) terminals.push_back(2u);
        for (u64 k = 0; k <= 3; ++k)
            for (u32 l = 1; l <= 3; ++l)
                for (const auto& term : terminals) {
                    bool expected =
                        oracle::cut(g, k, l, CutMode::connected_exact, term).has_value();
                    CutResult got = cut_connected(g, k, l, term);
                    if (got.found != expected) ++disagreements;
                    if (got.found)
                        note_witness(
                            !check_cut(g, *got.witness, k, l, CutMode::connected_exact, term));
                    if (l >= 2) {
                        bool expected_am =
                            oracle::cut(g, k, l, CutMode::at_most, term).has_value();
                        CutResult am = cut_at_most(g, k, l, term);
                        if (am.found != expected_am) ++disagreements;
                        if (am.found)
                            note_witness(
                                !check_cut(g, *am.witness, k, l, CutMode::at_most, term));
                    }
                }
    }
    // singleton-pair completeness repair exercised explicitly
    CutResult pair = cut_at_most(fixture, 0, 2);
    bool fixture_ok =
        pair.found && pair.witness && pair.witness->x == std::vector<u32>{1, 2};
    report(6, disagreements == 0 && fixture_ok,
           "cutting on " + std::to_string(corpus.size()) + " graphs <= 9 vertices, " +
               std::to_string(disagreements) +
               " disagreements, singleton-pair fixture " + (fixture_ok ? "hit" : "MISSED"));
}

// --- criterion 8: CLI determinism across thread counts ------------------------

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents, int id) {
        path = "ccg_acceptance_" + std::to_string(id) + ".gr";
        std::ofstream f(path);
        f << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

void criterion_determinism() {
    std::mt19937 rng(88);
    std::vector<std::vector<std::string>> instances;
    std::vector<std::unique_ptr<TempFile>> files;
    auto add = [&](const Graph& g, std::vector<std::string> args) {
        files.push_back(std::make_unique<TempFile>(serialize_graph(g),
                                                   static_cast<int>(files.size())));
        args.push_back("--input");
        args.push_back(files.back()->path);
        args.push_back("--json");
        instances.push_back(std::move(args));
    };
    for (int i = 0; i < 4; ++i) {
        Graph g = random_graph(6, 0.5, rng);
        add(g, {"matching", "--k", "2"});
        add(g, {"vc", "--k", "2"});
        add(g, {"cluster", "--k", "2", "--l", "2"});
        add(g, {"cut-atmost", "--k", "1", "--l", "2"});
    }
    Graph p5 = path_graph(5);
    add(p5, {"path", "--k", "4"});
    add(p5, {"distance", "--from", "1", "--to", "5", "--d", "4"});
    add(cycle_graph(6), {"pvc", "--k", "2", "--t", "4"});
    add(disjoint_union(clique_graph(3), clique_graph(3)), {"many-cluster", "--k", "1"});

    bool identical = true;
    for (const auto& inst : instances) {
        std::string reference;
        for (const char* threads : {"1", "2", "8"}) {
            auto args = inst;
            args.push_back("--threads");
            args.push_back(threads);
            std::ostringstream out, err;
            run_cli(args, out, err);
            if (reference.empty())
                reference = out.str();
            else if (out.str() != reference)
                identical = false;
        }
    }
    report(8, identical,
           "byte-identical JSON for threads {1,2,8} on " + std::to_string(instances.size()) +
               " instances");
}

// --- criterion 9: parallel speedup (informational) ----------------------------

void criterion_speedup() {
    // two 30-vertex stars: no 3-matching, so the whole family is swept
    Graph g(60, false);
    for (u32 leaf = 2; leaf <= 30; ++leaf) g.add_edge(1, leaf);
    for (u32 leaf = 32; leaf <= 60; ++leaf) g.add_edge(31, leaf);

    auto time_run = [&](int threads) {
        double best = 1e18;
        for (int rep = 0; rep < 3; ++rep) {
            RunOptions opt;
            opt.threads = threads;
            auto start = Clock::now();
            BoolResult r = matching(g, 3, opt);
            double secs = seconds_since(start);
            if (r.answer) return -1.0;   // fixture must be negative
            best = std::min(best, secs);
        }
        return best;
    };
    double serial = time_run(1);
    double parallel = time_run(4);
    bool pass = serial > 0 && parallel > 0 && parallel <= 0.6 * serial;
    std::ostringstream detail;
    detail << "matching k=3 on 60 vertices: 1 thread " << serial << "s, 4 threads " << parallel
           << "s, ratio " << (parallel / serial) << " (target <= 0.6, informational)";
    report(9, pass, detail.str(), /*gating=*/false);
}

// --- criterion 10: depth and work accounting ----------------------------------

void criterion_accounting() {
    struct Fixture {
        Pattern pattern;
        Graph host;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({build_pattern(PatternSpec::paths_of(1, 4)), cycle_graph(6)});
    fixtures.push_back({build_pattern(PatternSpec::cycles_of(1, 4)), clique_graph(5)});
    fixtures.push_back({build_pattern(PatternSpec::copies_of(clique_graph(2), 2)), path_graph(5)});
    fixtures.push_back({build_pattern(PatternSpec::copies_of(clique_graph(3), 1)), clique_graph(4)});

    bool ok = true;
    std::string detail;
    for (const auto& [pattern, host] : fixtures) {
        EmbedResult r = embed(pattern, host);
        u64 bound = 1;
        for (int i = 0; i <= pattern.td.width(); ++i) bound *= host.vertex_count();
        if (r.stats.dp_levels != pattern.td.levels()) ok = false;
        if (r.stats.max_node_tuple_checks > bound) ok = false;
        detail += " [levels=" + std::to_string(r.stats.dp_levels) +
                  " checks<=" + std::to_string(r.stats.max_node_tuple_checks) + "/" +
                  std::to_string(bound) + "]";
    }
    report(10, ok, "per-node tuple checks within |V_G|^(width+1), phases = levels:" + detail);
}

} // namespace

int main() {
    criteria_family();          // criteria 1 and 2
    criterion_embed();          // criterion 3
    criterion_cover();          // criterion 4
    criterion_cluster();        // criterion 5
    criterion_cut();            // criterion 6
    report(7, witnesses_failed == 0,
           std::to_string(witnesses_checked) + " witnesses validated, " +
               std::to_string(witnesses_failed) + " failures");
    criterion_determinism();    // criterion 8
    criterion_speedup();        // criterion 9 (informational)
    criterion_accounting();     // criterion 10
    if (failures) std::printf("%d criteria FAILED\n", failures);
    else std::printf("all gating criteria passed\n");
    return failures;
}
