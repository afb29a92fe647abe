// Command-line front end: graph generation, truss decomposition runs,
// engine cross-validation, k-truss extraction, and benchmarking.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trussdec/generate.hpp"
#include "trussdec/graph.hpp"
#include "trussdec/kcore.hpp"
#include "trussdec/triangle.hpp"
#include "trussdec/truss_parallel.hpp"
#include "trussdec/truss_serial.hpp"

using json = nlohmann::json;
using namespace trussdec;

namespace {

double now() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

struct DecompositionReport {
    std::string algorithm;
    int workers = 1;
    std::uint32_t n = 0, m = 0;
    std::uint64_t wedge_count = 0;
    std::uint64_t triangle_count = 0;
    std::uint32_t t_max = 0;
    std::uint32_t c_max = 0;
    double t_support = 0, t_scan = 0, t_processing = 0, t_kcore = 0, t_reorder = 0;
    double wall = 0;  // decomposition stage only
    double gweps = 0;
    std::uint64_t sublevels = 0;
    std::vector<std::uint32_t> nsl;
    std::uint64_t core_bytes = 0;
    std::string pinning = "runtime default";

    json to_json() const {
        return json{{"algorithm", algorithm},
                    {"workers", workers},
                    {"n", n},
                    {"m", m},
                    {"wedge_count", wedge_count},
                    {"triangle_count", triangle_count},
                    {"t_max", t_max},
                    {"c_max", c_max},
                    {"timings",
                     {{"support", t_support},
                      {"scan", t_scan},
                      {"processing", t_processing},
                      {"kcore", t_kcore},
                      {"reorder", t_reorder}}},
                    {"wall", wall},
                    {"gweps", gweps},
                    {"sublevels", sublevels},
                    {"nsl", nsl},
                    {"core_array_bytes", core_bytes},
                    {"pinning", pinning}};
    }
};

struct RunOutput {
    TrussnessResult result;
    DecompositionReport report;
    TrussGraph tg;
};

int default_workers() {
    return omp_get_max_threads();  // honors OMP_NUM_THREADS
}

RunOutput run_decomposition(CsrGraph g, const std::string& algorithm, int workers,
                            const std::string& reorder_mode, std::uint32_t oracle_max_n) {
    RunOutput out;
    out.report.algorithm = algorithm;
    out.report.workers = workers;

    double t0 = now();
    CorenessResult cores;
    if (reorder_mode == "kcore") {
        cores = kcore_parallel(g, workers);
        out.report.t_kcore = now() - t0;
        t0 = now();
        g = reorder(g, coreness_order(cores));
        out.report.t_reorder = now() - t0;
    } else {
        cores = kcore_serial(g);
        out.report.t_kcore = now() - t0;
    }
    out.report.c_max = cores.c_max;

    GraphStats st = stats(g);
    out.report.n = st.n;
    out.report.m = st.m;
    out.report.wedge_count = st.wedge_count;
    out.report.core_bytes = TrussGraph::core_array_bytes(g.n, g.m);

    out.tg = build_truss_graph(g);
    out.report.triangle_count = triangle_count(out.tg, workers);

    double wall0 = now();
    if (algorithm == "pkt") {
        ParallelDecomposition dec = truss_parallel(out.tg, workers);
        out.result = std::move(dec.result);
        out.report.t_support = dec.times.support;
        out.report.t_scan = dec.times.scan;
        out.report.t_processing = dec.times.processing;
        out.report.sublevels = dec.trace.sublevel_total();
        out.report.nsl = dec.trace.nsl;
    } else if (algorithm == "wc") {
        double t1 = now();
        SupportArray s0 = support_am4(out.tg, workers);
        out.report.t_support = now() - t1;
        t1 = now();
        out.result = truss_wc(out.tg, s0);
        out.report.t_processing = now() - t1;
    } else if (algorithm == "oracle") {
        if (g.n > oracle_max_n)
            throw std::runtime_error("oracle engine refused: n = " + std::to_string(g.n) +
                                     " exceeds --max-n = " + std::to_string(oracle_max_n));
        double t1 = now();
        out.result = truss_oracle(out.tg.csr);
        out.report.t_processing = now() - t1;
    } else {
        throw std::runtime_error("unknown algorithm: " + algorithm);
    }
    out.report.wall = now() - wall0;
    out.report.t_max = out.result.t_max;
    if (out.report.wall > 0)
        out.report.gweps = static_cast<double>(st.wedge_count) / (out.report.wall * 1e9);
    return out;
}

void write_dump(std::ostream& os, const RunOutput& run, const std::string& format) {
    const TrussGraph& tg = run.tg;
    if (format == "tsv") {
        for (EdgeId e = 0; e < tg.m(); e++)
            os << e << '\t' << tg.csr.label_of(tg.el[e].first) << '\t'
               << tg.csr.label_of(tg.el[e].second) << '\t' << run.result.truss[e] << '\n';
    } else if (format == "json") {
        json edges = json::array();
        for (EdgeId e = 0; e < tg.m(); e++)
            edges.push_back({e, tg.csr.label_of(tg.el[e].first),
                             tg.csr.label_of(tg.el[e].second), run.result.truss[e]});
        os << json{{"edges", edges}}.dump(2) << '\n';
    } else if (format == "hist") {
        for (const auto& [k, cnt] : run.result.kclass_sizes) os << k << '\t' << cnt << '\n';
    } else {
        throw std::runtime_error("unknown format: " + format);
    }
}

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int cmd_gen(const std::string& model, std::uint32_t n, double p, std::uint32_t scale,
            std::uint32_t ef, double a, double b, double c, double d, std::uint64_t seed,
            const std::string& output) {
    RawEdgeList raw;
    if (model == "er") {
        raw = generate_er(n, p, seed);
    } else if (model == "rmat") {
        raw = generate_rmat(scale, ef, seed, a, b, c, d);
    } else {
        throw std::runtime_error("unknown model: " + model);
    }
    write_edge_list(output, raw);
    std::cerr << "wrote " << raw.edges.size() << " raw edges to " << output << '\n';
    return 0;
}

int cmd_decompose(const std::string& input, const std::string& algorithm, int workers,
                  const std::string& reorder_mode, const std::string& output,
                  const std::string& format, std::uint32_t oracle_max_n) {
    CsrGraph g = canonicalize(read_edge_list(input));
    RunOutput run = run_decomposition(std::move(g), algorithm, workers, reorder_mode, oracle_max_n);

    std::ofstream file;
    write_dump(open_or_stdout(output, file), run, format);
    std::cerr << run.report.to_json().dump(2) << '\n';
    return 0;
}

int cmd_ktruss(const std::string& input, std::uint32_t k, int workers,
               const std::string& output) {
    if (k < 2) throw std::runtime_error("--k must be at least 2");
    CsrGraph g = canonicalize(read_edge_list(input));
    TrussGraph tg = build_truss_graph(g);
    ParallelDecomposition dec = truss_parallel(tg, workers);

    std::ofstream file;
    std::ostream& os = open_or_stdout(output, file);
    if (k > dec.result.t_max) {
        std::cerr << "notice: k = " << k << " exceeds t_max = " << dec.result.t_max
                  << "; no " << k << "-trusses exist\n";
        return 0;
    }
    auto comps = ktruss_subgraphs(tg, dec.result, k);
    for (std::size_t i = 0; i < comps.size(); i++) {
        os << "# component " << i << " (" << comps[i].size() << " edges)\n";
        for (EdgeId e : comps[i])
            os << tg.csr.label_of(tg.el[e].first) << '\t' << tg.csr.label_of(tg.el[e].second)
               << '\n';
    }
    std::cerr << comps.size() << " " << k << "-truss component(s)\n";
    return 0;
}

// Self-checking harness over generated suites: pkt at several worker
// counts vs. wc vs. the brute-force oracle.
int cmd_validate(const std::string& input, std::uint32_t seeds, std::uint32_t max_n) {
    struct Case {
        std::string name;
        CsrGraph g;
    };
    std::vector<Case> cases;
    if (!input.empty()) {
        cases.push_back({input, canonicalize(read_edge_list(input))});
    } else {
        for (std::uint32_t s = 1; s <= seeds; s++) {
            std::uint32_t n = 8 + (s * 37) % 249;
            double p = 0.02 + 0.4 * ((s * 61) % 100) / 100.0;
            cases.push_back({"er(n=" + std::to_string(n) + ",p=" + std::to_string(p) +
                                 ",seed=" + std::to_string(s) + ")",
                             canonicalize(generate_er(n, p, s))});
            std::uint32_t scale = 4 + s % 5;
            cases.push_back({"rmat(scale=" + std::to_string(scale) + ",seed=" + std::to_string(s) + ")",
                             canonicalize(generate_rmat(scale, 8, s))});
        }
    }

    std::uint64_t checked = 0;
    for (const auto& kase : cases) {
        if (kase.g.m == 0) continue;  // trivially passing
        TrussGraph tg = build_truss_graph(kase.g);
        TrussnessResult ref;
        std::string ref_name;
        if (kase.g.n <= max_n) {
            ref = truss_oracle(kase.g);
            ref_name = "oracle";
        } else {
            ref = truss_wc(tg, support_am4(tg, 1));
            ref_name = "wc";
        }

        auto check = [&](const TrussnessResult& got, const std::string& name) {
            if (got.truss == ref.truss) return true;
            std::cout << "DIVERGENCE on " << kase.name << ": " << name << " vs " << ref_name
                      << '\n';
            for (EdgeId e = 0; e < tg.m(); e++) {
                if (got.truss[e] != ref.truss[e])
                    std::cout << "  edge " << e << " {" << tg.el[e].first << "," << tg.el[e].second
                              << "}: " << name << "=" << got.truss[e] << " " << ref_name << "="
                              << ref.truss[e] << '\n';
            }
            std::cout << "  graph edges:";
            for (EdgeId e = 0; e < tg.m(); e++)
                std::cout << " {" << tg.el[e].first << "," << tg.el[e].second << "}";
            std::cout << '\n';
            return false;
        };

        if (kase.g.n <= max_n) {
            if (!check(truss_wc(tg, support_am4(tg, 1)), "wc")) return 1;
        }
        for (int w : {1, 2, 4}) {
            if (!check(truss_parallel(tg, w).result, "pkt(w=" + std::to_string(w) + ")"))
                return 1;
        }
        checked++;
    }
    std::cout << "all engines agree on " << checked << " graph(s)\n";
    return 0;
}

int cmd_bench(const std::string& input, std::vector<int> workers_list, std::uint32_t repeats,
              const std::string& output) {
    if (workers_list.empty()) workers_list = {1, default_workers()};
    CsrGraph g = canonicalize(read_edge_list(input));
    GraphStats st = stats(g);
    TrussGraph tg = build_truss_graph(g);

    json runs = json::array();
    double base_total = 0;
    std::printf("%8s %10s %10s %10s %10s %10s %8s\n", "workers", "support", "scan", "process",
                "total", "GWeps", "speedup");
    for (int w : workers_list) {
        std::vector<double> support, scan_t, process, total;
        json samples = json::array();
        for (std::uint32_t r = 0; r < repeats; r++) {
            double t0 = now();
            ParallelDecomposition dec = truss_parallel(tg, w);
            double wall = now() - t0;
            support.push_back(dec.times.support);
            scan_t.push_back(dec.times.scan);
            process.push_back(dec.times.processing);
            total.push_back(wall);
            samples.push_back({{"support", dec.times.support},
                               {"scan", dec.times.scan},
                               {"processing", dec.times.processing},
                               {"wall", wall}});
        }
        auto median = [](std::vector<double> v) {
            std::sort(v.begin(), v.end());
            return v[v.size() / 2];
        };
        double med_total = median(total);
        if (w == workers_list.front()) base_total = med_total;
        double gweps = static_cast<double>(st.wedge_count) / (med_total * 1e9);
        double speedup = base_total / med_total;
        std::printf("%8d %10.4f %10.4f %10.4f %10.4f %10.4f %8.2f\n", w, median(support),
                    median(scan_t), median(process), med_total, gweps, speedup);
        runs.push_back({{"workers", w},
                        {"median",
                         {{"support", median(support)},
                          {"scan", median(scan_t)},
                          {"processing", median(process)},
                          {"wall", med_total}}},
                        {"gweps", gweps},
                        {"speedup", speedup},
                        {"samples", samples}});
    }

    if (!output.empty()) {
        json doc{{"input", input},
                 {"n", st.n},
                 {"m", st.m},
                 {"wedge_count", st.wedge_count},
                 {"repeats", repeats},
                 {"runs", runs}};
        std::ofstream f(output);
        f << doc.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-truss decomposition toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random graph edge list");
    std::string model = "er", output;
    std::uint32_t n = 100, scale = 10, ef = 16;
    double p = 0.1, qa = 0.57, qb = 0.19, qc = 0.19, qd = 0.05;
    std::uint64_t seed = 1;
    gen->add_option("--model", model, "er|rmat")->check(CLI::IsMember({"er", "rmat"}));
    gen->add_option("--n", n, "vertex count (er)");
    gen->add_option("--p", p, "edge probability (er)");
    gen->add_option("--scale", scale, "log2 vertex count (rmat)");
    gen->add_option("--ef", ef, "edge factor (rmat)");
    gen->add_option("--a", qa);
    gen->add_option("--b", qb);
    gen->add_option("--c", qc);
    gen->add_option("--d", qd);
    gen->add_option("--seed", seed);
    gen->add_option("--output", output)->required();

    // decompose
    auto* dec = app.add_subcommand("decompose", "compute trussness of every edge");
    std::string input, algorithm = "pkt", reorder_mode = "natural", format = "tsv",
                dump_output;
    int threads = default_workers();
    std::uint32_t max_n = 512;
    dec->add_option("--input", input)->required();
    dec->add_option("--algorithm", algorithm, "pkt|wc|oracle");
    dec->add_option("--threads", threads);
    dec->add_option("--reorder", reorder_mode, "kcore|natural")
        ->check(CLI::IsMember({"kcore", "natural"}));
    dec->add_option("--output", dump_output, "trussness dump path (default stdout)");
    dec->add_option("--format", format, "tsv|json|hist");
    dec->add_option("--max-n", max_n, "size guard for the oracle engine");

    // validate
    auto* val = app.add_subcommand("validate", "cross-check pkt, wc and the oracle");
    std::string val_input;
    std::uint32_t seeds = 10, val_max_n = 512;
    val->add_option("--input", val_input, "check one input file instead of generated suites");
    val->add_option("--seeds", seeds);
    val->add_option("--max-n", val_max_n);

    // ktruss
    auto* ktr = app.add_subcommand("ktruss", "extract maximal k-truss components");
    std::string ktr_input, ktr_output;
    std::uint32_t k = 3;
    int ktr_threads = default_workers();
    ktr->add_option("--input", ktr_input)->required();
    ktr->add_option("--k", k)->required();
    ktr->add_option("--threads", ktr_threads);
    ktr->add_option("--output", ktr_output);

    // bench
    auto* ben = app.add_subcommand("bench", "per-phase timings across worker counts");
    std::string ben_input, ben_output;
    std::vector<int> workers_list;
    std::uint32_t repeats = 3;
    ben->add_option("--input", ben_input)->required();
    ben->add_option("--threads", workers_list, "worker counts to benchmark");
    ben->add_option("--repeats", repeats);
    ben->add_option("--output", ben_output, "JSON report path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(model, n, p, scale, ef, qa, qb, qc, qd, seed, output);
        if (dec->parsed())
            return cmd_decompose(input, algorithm, threads, reorder_mode, dump_output, format,
                                 max_n);
        if (val->parsed()) return cmd_validate(val_input, seeds, val_max_n);
        if (ktr->parsed()) return cmd_ktruss(ktr_input, k, ktr_threads, ktr_output);
        if (ben->parsed()) return cmd_bench(ben_input, workers_list, repeats, ben_output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
