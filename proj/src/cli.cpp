#include "ccg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ccg/cluster.hpp"
#include "ccg/cover.hpp"
#include "ccg/cut.hpp"
#include "ccg/embed.hpp"
#include "ccg/oracle.hpp"
#include "ccg/packing.hpp"

namespace ccg {

namespace {

using njson = nlohmann::ordered_json;

Graph load_graph(const std::string& path) {
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open input file: " + path);
        buffer << in.rdbuf();
    }
    return parse_graph(buffer.str());
}

Graph clique_graph(u32 size) {
    Graph g(size, false);
    for (u32 u = 1; u <= size; ++u)
        for (u32 v = u + 1; v <= size; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_component(u32 l) {
    Graph g(l, false);
    for (u32 i = 1; i < l; ++i) g.add_edge(i, i + 1);
    if (l >= 3) g.add_edge(l, 1);
    return g;
}

Graph path_component(u32 l) {
    Graph g(l, false);
    for (u32 i = 1; i < l; ++i) g.add_edge(i, i + 1);
    return g;
}

// Pattern expressions: kK2:3, kK3:2, cycle:k=2,l=4, path:k=1,l=5,
// forest:@file, graph:@file:k=2
struct PackPattern {
    std::vector<Graph> components;
    std::string text;
};

u32 parse_count(const std::string& text, const std::string& what) {
    u64 value = 0;
    if (text.empty()) throw parse_error("missing " + what + " in pattern expression");
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw parse_error("bad " + what + " in pattern expression");
        value = value * 10 + static_cast<u64>(ch - '0');
        if (value > 1000000) throw parse_error(what + " out of range in pattern expression");
    }
    return static_cast<u32>(value);
}

std::pair<u32, u32> parse_kl(const std::string& text) {
    u32 k = 0, l = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.rfind("k=", 0) == 0)
            k = parse_count(item.substr(2), "copy count");
        else if (item.rfind("l=", 0) == 0)
            l = parse_count(item.substr(2), "length");
        else
            throw parse_error("bad pattern expression item: " + item);
    }
    if (k == 0 || l == 0) throw parse_error("pattern expression needs k= and l=");
    return {k, l};
}

PackPattern parse_pack_pattern(const std::string& text) {
    PackPattern out;
    out.text = text;
    if (text.rfind("kK2:", 0) == 0) {
        u32 k = parse_count(text.substr(4), "copy count");
        for (u32 i = 0; i < k; ++i) out.components.push_back(clique_graph(2));
    } else if (text.rfind("kK3:", 0) == 0) {
        u32 k = parse_count(text.substr(4), "copy count");
        for (u32 i = 0; i < k; ++i) out.components.push_back(clique_graph(3));
    } else if (text.rfind("cycle:", 0) == 0) {
        auto [k, l] = parse_kl(text.substr(6));
        if (l < 3) throw parse_error("cycle length must be at least 3");
        for (u32 i = 0; i < k; ++i) out.components.push_back(cycle_component(l));
    } else if (text.rfind("path:", 0) == 0) {
        auto [k, l] = parse_kl(text.substr(5));
        for (u32 i = 0; i < k; ++i) out.components.push_back(path_component(l));
    } else if (text.rfind("forest:@", 0) == 0) {
        out.components.push_back(load_graph(text.substr(8)));
    } else if (text.rfind("graph:@", 0) == 0) {
        std::string rest = text.substr(7);
        u32 k = 1;
        auto pos = rest.find(":k=");
        if (pos != std::string::npos) {
            k = parse_count(rest.substr(pos + 3), "copy count");
            rest = rest.substr(0, pos);
        }
        Graph component = load_graph(rest);
        for (u32 i = 0; i < k; ++i) out.components.push_back(component);
    } else {
        throw parse_error("unknown pattern expression: " + text);
    }
    return out;
}

njson json_pairs(const std::vector<std::pair<u32, u32>>& pairs) {
    njson arr = njson::array();
    for (const auto& [u, v] : pairs) arr.push_back({u, v});
    return arr;
}

njson witness_json(const Embedding& e) {
    njson w;
    njson arr = njson::array();
    for (size_t i = 1; i < e.assignment.size(); ++i) arr.push_back(e.assignment[i]);
    w["assignment"] = arr;
    return w;
}

njson witness_json(const CoverWitness& c) {
    njson w;
    w["vertices"] = c.vertices;
    w["covered"] = json_pairs(c.covered);
    return w;
}

njson witness_json(const EditSet& e) {
    njson w;
    w["additions"] = json_pairs(e.additions);
    w["deletions"] = json_pairs(e.deletions);
    return w;
}

njson witness_json(const ClusterSolution& s) {
    njson w;
    w["edits"] = witness_json(s.edits);
    w["clusters"] = s.clusters;
    return w;
}

njson witness_json(const CutWitness& c) {
    njson w;
    w["X"] = c.x;
    w["S"] = c.s;
    w["Y"] = c.y;
    return w;
}

struct Report {
    std::string problem;
    njson params = njson::object();
    bool answer = false;
    njson witness;   // null unless set
    SearchStats stats;
    std::string human_witness;
};

SearchStats oracle_stats() {
    SearchStats s;
    s.family_size = "0";
    s.family_size_fits = true;
    s.family_size_u64 = 0;
    return s;
}

std::string describe_pairs(const std::vector<std::pair<u32, u32>>& pairs) {
    std::string out;
    for (const auto& [u, v] : pairs) {
        if (!out.empty()) out += ' ';
        out += '{' + std::to_string(u) + ',' + std::to_string(v) + '}';
    }
    return out;
}

std::string describe_vertices(const std::vector<u32>& vs) {
    std::string out;
    for (u32 v : vs) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

void set_embedding(Report& report, const std::optional<Embedding>& w) {
    if (!w) return;
    report.witness = witness_json(*w);
    std::string text;
    for (size_t u = 1; u < w->assignment.size(); ++u) {
        if (!text.empty()) text += ' ';
        text += std::to_string(u) + "->" + std::to_string(w->assignment[u]);
    }
    report.human_witness = text;
}

void set_cover(Report& report, const std::optional<CoverWitness>& w) {
    if (!w) return;
    report.witness = witness_json(*w);
    report.human_witness = "vertices: " + describe_vertices(w->vertices) +
                           " covered: " + describe_pairs(w->covered);
}

void set_edits(Report& report, const EditSet& e) {
    report.witness = witness_json(e);
    report.human_witness =
        "add: " + describe_pairs(e.additions) + " delete: " + describe_pairs(e.deletions);
}

void set_cluster(Report& report, const std::optional<ClusterSolution>& w) {
    if (!w) return;
    report.witness = witness_json(*w);
    std::string text = "add: " + describe_pairs(w->edits.additions) +
                       " delete: " + describe_pairs(w->edits.deletions) + " clusters:";
    for (const auto& c : w->clusters) text += " [" + describe_vertices(c) + "]";
    report.human_witness = text;
}

void set_cut(Report& report, const std::optional<CutWitness>& w) {
    if (!w) return;
    report.witness = witness_json(*w);
    report.human_witness = "X: " + describe_vertices(w->x) + " S: " + describe_vertices(w->s) +
                           " Y: " + describe_vertices(w->y);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"color-coding graph toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string engine_name = "colorcode";
    int threads = 0;
    bool json_mode = false;
    bool show_witness = false;
    bool timing = false;
    u32 multiplier = 1;
    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        if (with_input) sub->add_option("--input,-i", input, "graph file, or - for stdin");
        sub->add_option("--engine", engine_name, "colorcode | exhaustive | oracle");
        sub->add_option("--threads", threads, "worker count, 0 = all");
        sub->add_flag("--json", json_mode, "emit a JSON result document");
        sub->add_flag("--witness", show_witness, "print the witness in human output");
        sub->add_flag("--timing", timing, "include threads and wall time in JSON stats");
        sub->add_option("--mult", multiplier, "coloring family bound multiplier");
    };

    std::string pattern_file, pack_expr, parts_text, problem_name = "matching";
    u64 k = 0, t = 0;
    u32 l = 0, d = 0, from = 0, to = 0, fam_n = 0, fam_k = 0, fam_c = 0, p = 0;
    bool verify = false, p_param = false;
    i64 terminal = -1;
    std::string threads_list = "1,0";
    u32 repeat = 1;

    auto* emb = app.add_subcommand("emb", "embed a pattern graph");
    add_common(emb);
    emb->add_option("--pattern", pattern_file, "pattern graph file")->required();
    auto* match = app.add_subcommand("matching", "k disjoint edges");
    add_common(match);
    match->add_option("--k", k, "matching size")->required();
    auto* path = app.add_subcommand("path", "simple path on k vertices");
    add_common(path);
    path->add_option("--k", k, "path vertex count")->required();
    auto* dist = app.add_subcommand("distance", "bounded-length path between two vertices");
    add_common(dist);
    dist->add_option("--from", from, "source vertex")->required();
    dist->add_option("--to", to, "target vertex")->required();
    dist->add_option("--d", d, "distance bound")->required();
    auto* packc = app.add_subcommand("pack", "disjoint copies of a pattern multiset");
    add_common(packc);
    packc->add_option("--pattern", pack_expr, "kK2:3 | kK3:2 | cycle:k=..,l=.. | path:k=..,l=.. | forest:@file | graph:@file[:k=..]")
        ->required();
    auto* cyc = app.add_subcommand("cycle-pack", "k disjoint cycles of length l");
    add_common(cyc);
    cyc->add_option("--k", k, "copy count")->required();
    cyc->add_option("--l", l, "cycle length")->required();
    auto* vc = app.add_subcommand("vc", "vertex cover");
    add_common(vc);
    vc->add_option("--k", k, "cover budget")->required();
    auto* pvc = app.add_subcommand("pvc", "partial vertex cover");
    add_common(pvc);
    pvc->add_option("--k", k, "cover budget")->required();
    pvc->add_option("--t", t, "coverage target")->required();
    auto* epvc = app.add_subcommand("epvc", "exact partial vertex cover");
    add_common(epvc);
    epvc->add_option("--t", t, "exact coverage")->required();
    auto* clus = app.add_subcommand("cluster", "edit into exactly l cliques");
    add_common(clus);
    clus->add_option("--k", k, "edit budget")->required();
    clus->add_option("--l", l, "cluster count")->required();
    auto* many = app.add_subcommand("many-cluster", "edit into any number of cliques");
    add_common(many);
    many->add_option("--k", k, "edit budget")->required();
    auto* freel = app.add_subcommand("cluster-freel", "cluster editing, l as plain input");
    add_common(freel);
    freel->add_option("--k", k, "edit budget")->required();
    freel->add_option("--l", l, "cluster count")->required();
    auto* ppart = app.add_subcommand("ppartite", "edit into a complete p-partite graph");
    add_common(ppart);
    ppart->add_option("--k", k, "edit budget")->required();
    ppart->add_option("--p", p, "part count")->required();
    ppart->add_flag("--p-param", p_param, "treat p as a parameter");
    auto* multi = app.add_subcommand("multipartite", "components complete p_i-partite");
    add_common(multi);
    multi->add_option("--k", k, "edit budget")->required();
    multi->add_option("--parts", parts_text, "comma-separated part counts")->required();
    auto* cutc = app.add_subcommand("cut", "cut exactly l connected vertices");
    add_common(cutc);
    cutc->add_option("--k", k, "separator budget")->required();
    cutc->add_option("--l", l, "separated size")->required();
    cutc->add_option("--terminal", terminal, "vertex that must end up in X");
    auto* cuta = app.add_subcommand("cut-atmost", "cut at most l vertices");
    add_common(cuta);
    cuta->add_option("--k", k, "separator budget")->required();
    cuta->add_option("--l", l, "max separated size")->required();
    cuta->add_option("--terminal", terminal, "vertex that must end up in X");
    auto* fam = app.add_subcommand("family", "dump or verify a universal coloring family");
    add_common(fam, false);
    fam->add_option("--n", fam_n, "universe size")->required();
    fam->add_option("--k", fam_k, "subset size")->required();
    fam->add_option("--c", fam_c, "color count")->required();
    fam->add_flag("--verify", verify, "check coverage instead of dumping");
    auto* vfam = app.add_subcommand("verify-family", "verify family coverage");
    add_common(vfam, false);
    vfam->add_option("--n", fam_n, "universe size")->required();
    vfam->add_option("--k", fam_k, "subset size")->required();
    vfam->add_option("--c", fam_c, "color count")->required();
    auto* bench = app.add_subcommand("bench", "compare wall time across thread counts");
    add_common(bench);
    bench->add_option("--problem", problem_name, "matching | path | vc");
    bench->add_option("--k", k, "problem parameter");
    bench->add_option("--threads-list", threads_list, "comma-separated thread counts (0 = all)");
    bench->add_option("--repeat", repeat, "runs per thread count");

    std::vector<const char*> argv;
    argv.push_back("ccg");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    RunOptions opt;
    opt.threads = threads;
    opt.multiplier = multiplier;
    if (engine_name == "colorcode")
        opt.engine = Engine::colorcode;
    else if (engine_name == "exhaustive")
        opt.engine = Engine::exhaustive;
    else if (engine_name == "oracle")
        opt.engine = Engine::oracle;
    else {
        err << "unknown engine: " << engine_name << "\n";
        return 2;
    }

    try {
        Report report;
        bool decision_problem = true;

        if (fam->parsed() || vfam->parsed()) {
            bool do_verify = vfam->parsed() || verify;
            FamilyParams params = family_params(fam_n, fam_k, fam_c, multiplier);
            report.problem = do_verify ? "verify-family" : "family";
            report.params = {{"n", fam_n}, {"k", fam_k}, {"c", fam_c}, {"mult", multiplier}};
            report.stats.family_size = family_size_decimal(params);
            report.stats.family_size_fits = family_size_fits_u64(params);
            report.stats.family_size_u64 =
                report.stats.family_size_fits ? family_size(params) : 0;
            report.stats.family_blocks = block_count(params);
            report.stats.threads = resolve_threads(threads);
            if (do_verify) {
                CoverageReport coverage = verify_family(params);
                report.answer = coverage.covered;
                if (!json_mode) {
                    if (coverage.covered) {
                        out << "covered count=" << report.stats.family_size << "\n";
                    } else {
                        out << "not covered; subset "
                            << describe_vertices(coverage.counterexample->subset) << " target "
                            << describe_vertices(coverage.counterexample->target) << "\n";
                    }
                } else {
                    njson doc;
                    doc["problem"] = report.problem;
                    doc["params"] = report.params;
                    doc["answer"] = report.answer;
                    doc["witness"] = nullptr;
                    njson stats;
                    stats["family_size"] = report.stats.family_size_fits
                                               ? njson(report.stats.family_size_u64)
                                               : njson(report.stats.family_size);
                    stats["colorings_checked"] = report.stats.colorings_checked;
                    if (timing) {
                        stats["threads"] = report.stats.threads;
                        stats["millis"] = report.stats.millis;
                    }
                    doc["stats"] = stats;
                    out << doc.dump() << "\n";
                }
                return report.answer ? 0 : 1;
            }
            // Dump guarded exactly like verification.
            if (fam_n > 16 || fam_k > 3 || fam_c > 4)
                throw guard_error("family dump guarded to n <= 16, k <= 3, c <= 4");
            u64 count = family_size(params);
            out << "ucf " << fam_n << ' ' << fam_k << ' ' << fam_c << ' ' << count << "\n";
            for (u64 i = 0; i < count; ++i) {
                Coloring coloring = get_coloring(params, i);
                for (u32 x = 0; x < fam_n; ++x) out << (x ? " " : "") << coloring.values[x];
                out << "\n";
            }
            return 0;
        }

        if (bench->parsed()) {
            Graph g = load_graph(input);
            std::vector<int> counts;
            std::stringstream ss(threads_list);
            std::string item;
            while (std::getline(ss, item, ',')) counts.push_back(std::stoi(item));
            if (counts.empty()) counts = {1, 0};
            njson runs = njson::array();
            for (int tc : counts) {
                for (u32 rep = 0; rep < repeat; ++rep) {
                    RunOptions bopt = opt;
                    bopt.threads = tc;
                    BoolResult r;
                    if (problem_name == "matching")
                        r = matching(g, static_cast<u32>(k), bopt);
                    else if (problem_name == "path")
                        r = k_path(g, static_cast<u32>(k), bopt);
                    else
                        throw domain_error("bench problem must be matching or path");
                    njson run;
                    run["threads"] = resolve_threads(tc);
                    run["millis"] = r.stats.millis;
                    run["family_size"] = r.stats.family_size_fits
                                             ? njson(r.stats.family_size_u64)
                                             : njson(r.stats.family_size);
                    run["colorings_checked"] = r.stats.colorings_checked;
                    run["answer"] = r.answer;
                    runs.push_back(run);
                    if (!json_mode)
                        out << "threads=" << resolve_threads(tc) << " millis=" << r.stats.millis
                            << " family_size=" << r.stats.family_size
                            << " colorings_checked=" << r.stats.colorings_checked
                            << " answer=" << (r.answer ? "yes" : "no") << "\n";
                }
            }
            if (json_mode) {
                njson doc;
                doc["problem"] = "bench";
                doc["base"] = problem_name;
                doc["runs"] = runs;
                out << doc.dump() << "\n";
            }
            return 0;
        }

        Graph g = load_graph(input);
        const bool use_oracle = opt.engine == Engine::oracle;
        if (opt.engine == Engine::exhaustive && !(emb->parsed() || match->parsed() ||
                                                  path->parsed() || dist->parsed() ||
                                                  packc->parsed() || cyc->parsed())) {
            err << "the exhaustive engine only applies to embedding problems\n";
            return 2;
        }

        if (emb->parsed()) {
            report.problem = "emb";
            Graph h = load_graph(pattern_file);
            report.params = {{"pattern_vertices", h.vertex_count()},
                             {"pattern_edges", h.edge_count()}};
            if (use_oracle) {
                auto w = oracle::embed(h, g);
                report.answer = w.has_value();
                report.stats = oracle_stats();
                set_embedding(report, w);
            } else {
                TreeDecomposition td = exact_tree_decomposition(h);
                EmbedResult r = embed(h, td, g, {}, opt);
                report.answer = r.found;
                report.stats = r.stats;
                set_embedding(report, r.witness);
            }
        } else if (match->parsed()) {
            report.problem = "matching";
            report.params = {{"k", k}};
            if (use_oracle) {
                report.answer = oracle::matching(g, static_cast<u32>(k));
                report.stats = oracle_stats();
            } else {
                BoolResult r = matching(g, static_cast<u32>(k), opt);
                report.answer = r.answer;
                report.stats = r.stats;
            }
        } else if (path->parsed()) {
            report.problem = "path";
            report.params = {{"k", k}};
            if (use_oracle) {
                report.answer = oracle::k_path(g, static_cast<u32>(k));
                report.stats = oracle_stats();
            } else {
                BoolResult r = k_path(g, static_cast<u32>(k), opt);
                report.answer = r.answer;
                report.stats = r.stats;
            }
        } else if (dist->parsed()) {
            report.problem = "distance";
            report.params = {{"from", from}, {"to", to}, {"d", d}};
            if (use_oracle) {
                report.answer = oracle::distance(g, from, to, d);
                report.stats = oracle_stats();
            } else {
                BoolResult r = distance(g, from, to, d, opt);
                report.answer = r.answer;
                report.stats = r.stats;
            }
        } else if (packc->parsed() || cyc->parsed()) {
            report.problem = packc->parsed() ? "pack" : "cycle-pack";
            PackPattern pat;
            if (cyc->parsed()) {
                pat = parse_pack_pattern("cycle:k=" + std::to_string(k) +
                                         ",l=" + std::to_string(l));
            } else {
                pat = parse_pack_pattern(pack_expr);
            }
            report.params = {{"pattern", pat.text}};
            if (use_oracle) {
                auto w = oracle::pack(g, pat.components);
                report.answer = w.has_value();
                report.stats = oracle_stats();
                set_embedding(report, w);
            } else if (cyc->parsed()) {
                PackResult r = pack_cycles(g, static_cast<u32>(k), l, opt);
                report.answer = r.found;
                report.stats = r.stats;
                set_embedding(report, r.witness);
            } else {
                PackResult r = pack(g, pat.components, opt);
                report.answer = r.found;
                report.stats = r.stats;
                set_embedding(report, r.witness);
            }
        } else if (vc->parsed()) {
            report.problem = "vc";
            report.params = {{"k", k}};
            if (use_oracle) {
                auto w = oracle::vertex_cover(g, k);
                report.answer = w.has_value();
                report.stats = oracle_stats();
                set_cover(report, w);
            } else {
                CoverResult r = vertex_cover(g, k, opt);
                report.answer = r.found;
                report.stats = r.stats;
                set_cover(report, r.witness);
            }
        } else if (pvc->parsed()) {
            report.problem = "pvc";
            report.params = {{"k", k}, {"t", t}};
            if (use_oracle) {
                auto w = oracle::partial_vertex_cover(g, k, t);
                report.answer = w.has_value();
                report.stats = oracle_stats();
                set_cover(report, w);
            } else {
                CoverResult r = partial_vertex_cover(g, k, t, opt);
                report.answer = r.found;
                report.stats = r.stats;
                set_cover(report, r.witness);
            }
        } else if (epvc->parsed()) {
            report.problem = "epvc";
            report.params = {{"t", t}};
            if (use_oracle) {
                auto w = oracle::exact_partial_vertex_cover(g, t);
                report.answer = w.has_value();
                report.stats = oracle_stats();
                set_cover(report, w);
            } else {
                CoverResult r = exact_partial_vertex_cover(g, t, opt);
                report.answer = r.found;
                report.stats = r.stats;
                set_cover(report, r.witness);
            }
        } else if (clus->parsed() || freel->parsed()) {
            report.problem = clus->parsed() ? "cluster" : "cluster-freel";
            report.params = {{"k", k}, {"l", l}};
            if (use_oracle) {
                auto w = oracle::cluster_editing(g, k, l);
                report.answer = w.has_value();
                report.stats = oracle_stats();
                set_cluster(report, w);
            } else {
                ClusterResult r = clus->parsed() ? cluster_editing(g, k, l, opt)
                                                 : cluster_editing_free_l(g, k, l, opt);
                report.answer = r.found;
                report.stats = r.stats;
                set_cluster(report, r.witness);
            }
        } else if (many->parsed()) {
            report.problem = "many-cluster";
            report.params = {{"k", k}};
            if (use_oracle) {
                auto w = oracle::cluster_editing(g, k, std::nullopt);
                report.answer = w.has_value();
                report.stats = oracle_stats();
                set_cluster(report, w);
            } else {
                ClusterResult r = many_cluster_editing(g, k, opt);
                report.answer = r.found;
                report.stats = r.stats;
                set_cluster(report, r.witness);
            }
        } else if (ppart->parsed()) {
            report.problem = "ppartite";
            report.params = {{"k", k}, {"p", p}, {"p_param", p_param}};
            if (use_oracle) {
                auto w = oracle::p_partite_editing(g, k, p);
                report.answer = w.has_value();
                report.stats = oracle_stats();
                if (w) set_edits(report, *w);
            } else {
                PartiteResult r = p_partite_editing(g, k, p, p_param, opt);
                report.answer = r.found;
                report.stats = r.stats;
                if (r.witness) set_edits(report, *r.witness);
            }
        } else if (multi->parsed()) {
            report.problem = "multipartite";
            std::vector<u32> parts;
            std::stringstream ss(parts_text);
            std::string item;
            while (std::getline(ss, item, ',')) parts.push_back(parse_count(item, "part count"));
            report.params = {{"k", k}, {"parts", parts}};
            if (use_oracle) {
                auto w = oracle::multipartite_cluster_editing(g, k, parts);
                report.answer = w.has_value();
                report.stats = oracle_stats();
                set_cluster(report, w);
            } else {
                ClusterResult r = multipartite_cluster_editing(g, k, parts, opt);
                report.answer = r.found;
                report.stats = r.stats;
                set_cluster(report, r.witness);
            }
        } else if (cutc->parsed() || cuta->parsed()) {
            const bool connected = cutc->parsed();
            report.problem = connected ? "cut" : "cut-atmost";
            std::optional<u32> term;
            if (terminal >= 0) term = static_cast<u32>(terminal);
            report.params = {{"k", k}, {"l", l}};
            if (term) report.params["terminal"] = *term;
            if (use_oracle) {
                auto w = oracle::cut(g, k, l,
                                     connected ? CutMode::connected_exact : CutMode::at_most,
                                     term);
                report.answer = w.has_value();
                report.stats = oracle_stats();
                set_cut(report, w);
            } else {
                CutResult r = connected ? cut_connected(g, k, l, term, opt)
                                        : cut_at_most(g, k, l, term, opt);
                report.answer = r.found;
                report.stats = r.stats;
                set_cut(report, r.witness);
            }
        } else {
            err << "no subcommand\n";
            return 2;
        }

        if (json_mode) {
            njson doc;
            doc["problem"] = report.problem;
            doc["params"] = report.params;
            doc["answer"] = report.answer;
            doc["witness"] = report.witness.is_null() ? njson(nullptr) : report.witness;
            njson stats;
            stats["family_size"] = report.stats.family_size_fits
                                       ? njson(report.stats.family_size_u64)
                                       : njson(report.stats.family_size);
            stats["colorings_checked"] = report.stats.colorings_checked;
            if (timing) {
                stats["threads"] = report.stats.threads;
                stats["millis"] = report.stats.millis;
            }
            doc["stats"] = stats;
            out << doc.dump() << "\n";
        } else {
            out << (report.answer ? "yes" : "no") << "\n";
            if (show_witness && !report.human_witness.empty())
                out << report.human_witness << "\n";
        }
        (void)decision_problem;
        return report.answer ? 0 : 1;
    } catch (const guard_error& e) {
        err << "guard: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace ccg
