// Command-line front end. Everything goes through the shared-library C API;
// this translation unit deliberately includes no core headers.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <vector>

#include <CLI11.hpp>

#include "hardcore/hardcore.h"

namespace {

struct StringFree {
    void operator()(char* s) const { hc_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringFree>;

struct GraphFree {
    void operator()(hc_graph* g) const { hc_graph_free(g); }
};
using GraphPtr = std::unique_ptr<hc_graph, GraphFree>;

struct PolyFree {
    void operator()(hc_poly* p) const { hc_poly_free(p); }
};
using PolyPtr = std::unique_ptr<hc_poly, PolyFree>;

/// Input errors exit 1; exit 2 is reserved for verified bound violations.
[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(1);
}

void check(hc_status status) {
    if (status != HC_OK) die(hc_last_error());
}

int stdout_sink(void*, const char* line) {
    std::cout << line << '\n';
    return std::cout.good() ? 0 : 1;
}

int warn_sink(void*, const char* line) {
    std::cerr << "warning: " << line << '\n';
    return 0;
}

bool is_regular_file(const std::string& path) {
    struct stat st{};
    return ::stat(path.c_str(), &st) == 0 && S_ISREG(st.st_mode);
}

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_text(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream in(path);
    if (!in) die("cannot open " + path);
    return read_stream(in);
}

/// Resolves the positional <graph> argument: an inline graph6 string, "-"
/// or a file path holding graph6 lines (one graph per line), or — with
/// --edges — a file containing "u v" edge lines ("n <count>" header allowed).
std::vector<GraphPtr> load_graphs(const std::string& input, bool edges_mode) {
    std::vector<GraphPtr> graphs;
    if (edges_mode) {
        hc_graph* g = nullptr;
        check(hc_graph_from_edge_list(read_text(input).c_str(), &g));
        graphs.emplace_back(g);
        return graphs;
    }
    if (input != "-" && !is_regular_file(input)) {
        hc_graph* g = nullptr;
        check(hc_graph_from_graph6(input.c_str(), &g));
        graphs.emplace_back(g);
        return graphs;
    }
    std::istringstream lines(read_text(input));
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        hc_graph* g = nullptr;
        check(hc_graph_from_graph6(line.c_str(), &g));
        graphs.emplace_back(g);
    }
    if (graphs.empty()) die("no graphs found in " + input);
    return graphs;
}

struct FormatFlags {
    bool json = false;
    bool csv = false;
};

void add_format_flags(CLI::App* cmd, FormatFlags& fmt) {
    auto* j = cmd->add_flag("--json", fmt.json, "emit JSON lines");
    cmd->add_flag("--csv", fmt.csv, "emit CSV")->excludes(j);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and sampled statistics of the hard-core model on "
                 "small graphs: independence polynomials, occupancy bounds, "
                 "Glauber sampling, and corpus scans"};
    app.require_subcommand(1);

    // ---- poly ------------------------------------------------------------
    std::string poly_input;
    bool poly_edges = false;
    uint32_t poly_cap = 0;
    auto* poly = app.add_subcommand(
        "poly", "independence polynomial coefficients as JSON");
    poly->add_option("graph", poly_input,
                     "graph6 string, graph6 file, or - for stdin")
        ->required();
    poly->add_flag("--edges", poly_edges, "treat the input as an edge list");
    poly->add_option("--size-cap", poly_cap,
                     "largest exact-mode graph order (default 40)");

    // ---- eval ------------------------------------------------------------
    std::string eval_input, eval_lambda = "1";
    bool eval_edges = false;
    uint32_t eval_cap = 0;
    FormatFlags eval_fmt;
    auto* eval = app.add_subcommand(
        "eval", "exact partition function, mean size, occupancy, variance");
    eval->add_option("graph", eval_input, "graph6 string, file, or -")
        ->required();
    eval->add_option("--lambda", eval_lambda,
                     "fugacity as a fraction or decimal (default 1)");
    eval->add_flag("--edges", eval_edges, "treat the input as an edge list");
    eval->add_option("--size-cap", eval_cap, "exact-mode order cap");
    add_format_flags(eval, eval_fmt);

    // ---- ratio -----------------------------------------------------------
    std::string ratio_input, ratio_lambda = "1";
    bool ratio_edges = false;
    uint32_t ratio_cap = 0;
    auto* ratio = app.add_subcommand(
        "ratio", "exact maximum-to-average independent-set size ratio");
    ratio->add_option("graph", ratio_input, "graph6 string, file, or -")
        ->required();
    ratio->add_option("--lambda", ratio_lambda, "fugacity (default 1)");
    ratio->add_flag("--edges", ratio_edges, "treat the input as an edge list");
    ratio->add_option("--size-cap", ratio_cap, "exact-mode order cap");

    // ---- bounds ----------------------------------------------------------
    std::string bounds_input, bounds_grid = "1";
    uint32_t bounds_cap = 0;
    FormatFlags bounds_fmt;
    auto* bounds = app.add_subcommand(
        "bounds",
        "verify occupancy and partition-function bounds over a corpus");
    bounds->add_option("corpus", bounds_input, "graph6 file or - for stdin")
        ->required();
    bounds->add_option("--lambda-grid", bounds_grid,
                       "comma-separated fugacities (default 1)");
    bounds->add_option("--size-cap", bounds_cap, "exact-mode order cap");
    add_format_flags(bounds, bounds_fmt);

    // ---- sample ----------------------------------------------------------
    std::string sample_input;
    double sample_lambda = 1.0;
    uint64_t sample_seed = 0, sample_count = 100000;
    uint64_t sample_burn = UINT64_MAX, sample_thin = 0;
    auto* sample = app.add_subcommand(
        "sample", "Glauber-dynamics occupancy estimate with diagnostics");
    sample->add_option("graph", sample_input, "graph6 string, file, or -")
        ->required();
    sample->add_option("--lambda", sample_lambda, "fugacity (default 1)");
    sample->add_option("--seed", sample_seed, "RNG seed")->required();
    sample->add_option("--samples", sample_count,
                       "number of thinned samples (default 100000)");
    sample->add_option("--burn-in", sample_burn,
                       "burn-in steps (default 100 n log n)");
    sample->add_option("--thinning", sample_thin,
                       "steps between samples (default n)");

    // ---- gen-regular -----------------------------------------------------
    uint32_t gen_n = 0, gen_d = 0;
    uint64_t gen_seed = 0, gen_attempts = 0;
    bool gen_tf = false, gen_json = false;
    auto* gen = app.add_subcommand(
        "gen-regular", "sample a uniform random d-regular graph");
    gen->add_option("--n", gen_n, "number of vertices")->required();
    gen->add_option("--d", gen_d, "degree")->required();
    gen->add_option("--seed", gen_seed, "RNG seed")->required();
    gen->add_flag("--triangle-free", gen_tf, "condition on triangle-freeness");
    gen->add_option("--max-attempts", gen_attempts,
                    "restart budget (default 100000)");
    gen->add_flag("--json", gen_json,
                  "emit JSON with rejection counts instead of bare graph6");

    // ---- scan ------------------------------------------------------------
    std::string scan_input, scan_lambda = "1";
    bool scan_tf = false, scan_regular = false;
    uint32_t scan_clique = 0, scan_mindeg = 0, scan_topk = 10, scan_cap = 0;
    FormatFlags scan_fmt;
    auto* scan = app.add_subcommand(
        "scan", "rank corpus graphs by maximum-to-average size ratio");
    scan->add_option("corpus", scan_input, "graph6 file or - for stdin")
        ->required();
    scan->add_option("--lambda", scan_lambda, "fugacity (default 1)");
    scan->add_flag("--triangle-free", scan_tf, "keep triangle-free graphs only");
    scan->add_option("--clique-free", scan_clique,
                     "keep K_r-free graphs only (0 disables)");
    scan->add_option("--min-degree", scan_mindeg, "minimum-degree filter");
    scan->add_flag("--regular-only", scan_regular, "keep regular graphs only");
    scan->add_option("--top-k", scan_topk, "records to retain (default 10)");
    scan->add_option("--size-cap", scan_cap, "exact-mode order cap");
    add_format_flags(scan, scan_fmt);

    // ---- circulant-search ------------------------------------------------
    uint32_t circ_n = 0, circ_min = 1, circ_max = 0, circ_topk = 0;
    int64_t circ_alpha = -1;
    bool circ_tf = false;
    std::string circ_lambda = "1";
    FormatFlags circ_fmt;
    auto* circ = app.add_subcommand(
        "circulant-search",
        "enumerate circulant graphs by connection set and rank by ratio");
    circ->add_option("--n", circ_n, "number of vertices")->required();
    circ->add_option("--min-size", circ_min, "smallest connection-set size");
    circ->add_option("--max-size", circ_max,
                     "largest connection-set size (default n/2)");
    circ->add_flag("--triangle-free", circ_tf, "keep triangle-free graphs only");
    circ->add_option("--alpha-target", circ_alpha,
                     "keep graphs with this independence number (-1 disables)");
    circ->add_option("--lambda", circ_lambda, "fugacity (default 1)");
    circ->add_option("--top-k", circ_topk, "records to retain (0 keeps all)");
    add_format_flags(circ, circ_fmt);

    // ---- tightness -------------------------------------------------------
    uint32_t tight_n = 0, tight_d = 0;
    std::string tight_grid = "1", tight_seeds;
    uint64_t tight_samples = 0, tight_burn = UINT64_MAX, tight_thin = 0;
    FormatFlags tight_fmt;
    auto* tight = app.add_subcommand(
        "tightness",
        "compare sampled occupancy of random regular graphs against the "
        "infinite-tree benchmark");
    tight->add_option("--n", tight_n, "number of vertices")->required();
    tight->add_option("--d", tight_d, "degree")->required();
    tight->add_option("--lambda-grid", tight_grid,
                      "comma-separated fugacities (default 1)");
    tight->add_option("--seeds", tight_seeds, "comma-separated RNG seeds")
        ->required();
    tight->add_option("--samples", tight_samples,
                      "thinned samples per run (default 100000)");
    tight->add_option("--burn-in", tight_burn,
                      "burn-in steps (default 100 n log n)");
    tight->add_option("--thinning", tight_thin,
                      "steps between samples (default n)");
    add_format_flags(tight, tight_fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (poly->parsed()) {
        for (const GraphPtr& g : load_graphs(poly_input, poly_edges)) {
            hc_poly* p = nullptr;
            check(hc_poly_compute(g.get(), poly_cap, &p));
            PolyPtr poly_ptr(p);
            char* text = nullptr;
            check(hc_poly_to_json(p, &text));
            ApiString out(text);
            std::cout << out.get() << '\n';
        }
        return 0;
    }

    if (eval->parsed()) {
        bool first = true;
        for (const GraphPtr& g : load_graphs(eval_input, eval_edges)) {
            hc_poly* p = nullptr;
            check(hc_poly_compute(g.get(), eval_cap, &p));
            PolyPtr poly_ptr(p);
            char* text = nullptr;
            if (eval_fmt.csv)
                check(hc_poly_eval_csv(p, eval_lambda.c_str(), first, &text));
            else
                check(hc_poly_eval_json(p, eval_lambda.c_str(), &text));
            ApiString out(text);
            std::cout << out.get() << '\n';
            first = false;
        }
        return 0;
    }

    if (ratio->parsed()) {
        for (const GraphPtr& g : load_graphs(ratio_input, ratio_edges)) {
            char* text = nullptr;
            check(hc_ratio(g.get(), ratio_lambda.c_str(), ratio_cap, &text));
            ApiString out(text);
            std::cout << out.get() << '\n';
        }
        return 0;
    }

    if (bounds->parsed()) {
        uint64_t violations = 0;
        char* summary = nullptr;
        check(hc_verify_bounds_file(bounds_input.c_str(), bounds_grid.c_str(),
                                    bounds_cap, bounds_fmt.json ? 1 : 0,
                                    stdout_sink, nullptr, &violations,
                                    &summary));
        ApiString summary_ptr(summary);
        std::cerr << summary_ptr.get() << '\n';
        return violations > 0 ? 2 : 0;
    }

    if (sample->parsed()) {
        std::vector<GraphPtr> graphs = load_graphs(sample_input, false);
        char* text = nullptr;
        check(hc_sample_json(graphs.front().get(), sample_lambda, sample_seed,
                             sample_count, sample_burn, sample_thin, &text));
        ApiString out(text);
        std::cout << out.get() << '\n';
        return 0;
    }

    if (gen->parsed()) {
        char* text = nullptr;
        check(hc_random_regular(gen_n, gen_d, gen_seed, gen_tf ? 1 : 0,
                                gen_attempts, gen_json ? 1 : 0, &text));
        ApiString out(text);
        std::cout << out.get() << '\n';
        return 0;
    }

    if (scan->parsed()) {
        uint64_t ranked = 0, filtered = 0;
        check(hc_scan_file(scan_input.c_str(), scan_lambda.c_str(),
                           scan_tf ? 1 : 0, scan_clique, scan_mindeg,
                           scan_regular ? 1 : 0, scan_topk, scan_cap,
                           scan_fmt.json ? 1 : 0, stdout_sink, nullptr,
                           warn_sink, nullptr, &ranked, &filtered));
        std::cerr << "ranked " << ranked << " graphs (" << filtered
                  << " filtered out)\n";
        return 0;
    }

    if (circ->parsed()) {
        check(hc_circulant_search(circ_n, circ_min, circ_max, circ_tf ? 1 : 0,
                                  circ_alpha, circ_lambda.c_str(), circ_topk,
                                  circ_fmt.json ? 1 : 0, stdout_sink,
                                  nullptr));
        return 0;
    }

    if (tight->parsed()) {
        check(hc_tightness(tight_n, tight_d, tight_grid.c_str(),
                           tight_seeds.c_str(), tight_samples, tight_burn,
                           tight_thin, tight_fmt.json ? 1 : 0, stdout_sink,
                           nullptr));
        return 0;
    }

    return 0;
}
