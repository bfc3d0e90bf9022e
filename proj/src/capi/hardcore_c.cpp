#include "hardcore/hardcore.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "indpoly.hpp"
#include "random_regular.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "sampler.hpp"
#include "scanner.hpp"

struct hc_graph {
    hardcore::Graph g;
};

struct hc_poly {
    hardcore::IndPoly p;
};

namespace {

thread_local std::string t_last_error = "no error";

/// Thrown inside sink adapters when the C callback asks to abort.
struct SinkAbort {};

hc_status fail(hc_status status, const std::string& message) {
    t_last_error = message;
    return status;
}

hc_status map_code(hardcore::Error::Code code) {
    using Code = hardcore::Error::Code;
    switch (code) {
        case Code::InvalidArgument: return HC_ERR_INVALID_ARGUMENT;
        case Code::Parse: return HC_ERR_PARSE;
        case Code::TooLarge: return HC_ERR_TOO_LARGE;
        case Code::Precondition: return HC_ERR_PRECONDITION;
        case Code::BudgetExceeded: return HC_ERR_BUDGET_EXCEEDED;
        case Code::Io: return HC_ERR_IO;
        case Code::Internal: return HC_ERR_INTERNAL;
    }
    return HC_ERR_INTERNAL;
}

template <typename Fn>
hc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const SinkAbort&) {
        return fail(HC_ERR_IO, "output sink aborted the operation");
    } catch (const hardcore::Error& e) {
        return fail(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(HC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(HC_ERR_INTERNAL, "unknown failure");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hc_status give_string(const std::string& s, char** out) {
    *out = dup_string(s);
    return *out ? HC_OK : fail(HC_ERR_INTERNAL, "out of memory");
}

mpq_class positive_rational(const char* text, const char* what) {
    if (!text) hardcore::throw_invalid(std::string(what) + " is required");
    mpq_class v = hardcore::parse_rational(text);
    if (!(v > 0)) hardcore::throw_invalid(std::string(what) + " must be positive");
    return v;
}

void emit(hc_line_sink sink, void* ctx, const std::string& line) {
    if (sink && sink(ctx, line.c_str()) != 0) throw SinkAbort{};
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

/// Opens the corpus path or falls back to stdin for "-".
class CorpusStream {
  public:
    explicit CorpusStream(const char* path) {
        if (!path) hardcore::throw_invalid("corpus path is required");
        if (std::string(path) == "-") {
            in_ = &std::cin;
            return;
        }
        file_.open(path);
        if (!file_)
            hardcore::throw_io("cannot open corpus file: " + std::string(path));
        in_ = &file_;
    }
    std::istream& stream() { return *in_; }

  private:
    std::ifstream file_;
    std::istream* in_ = nullptr;
};

} // namespace

extern "C" {

const char* hc_last_error(void) { return t_last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

hc_status hc_graph_from_graph6(const char* line, hc_graph** out) {
    if (!line || !out) return fail(HC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new hc_graph{hardcore::graph6::decode(line)};
        return HC_OK;
    });
}

hc_status hc_graph_from_edge_list(const char* text, hc_graph** out) {
    if (!text || !out) return fail(HC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new hc_graph{hardcore::Graph::from_edge_list_text(text)};
        return HC_OK;
    });
}

void hc_graph_free(hc_graph* g) { delete g; }

uint32_t hc_graph_order(const hc_graph* g) { return g ? g->g.order() : 0; }

hc_status hc_graph_to_graph6(const hc_graph* g, char** out) {
    if (!g || !out) return fail(HC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { return give_string(hardcore::graph6::encode(g->g), out); });
}

hc_status hc_graph_stats(const hc_graph* g, uint32_t* max_degree,
                         uint32_t* min_degree, int* is_regular,
                         int* triangle_free, uint32_t* girth,
                         uint64_t* edge_count) {
    if (!g) return fail(HC_ERR_INVALID_ARGUMENT, "null graph");
    return guarded([&] {
        const hardcore::GraphStats st = g->g.stats();
        if (max_degree) *max_degree = st.max_degree;
        if (min_degree) *min_degree = st.min_degree;
        if (is_regular) *is_regular = st.is_regular ? 1 : 0;
        if (triangle_free) *triangle_free = st.triangle_free ? 1 : 0;
        if (girth) *girth = st.girth;
        if (edge_count) *edge_count = st.edge_count;
        return HC_OK;
    });
}

hc_status hc_poly_compute(const hc_graph* g, uint32_t size_cap, hc_poly** out) {
    if (!g || !out) return fail(HC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hardcore::PolyOptions opts;
        if (size_cap > 0) opts.size_cap = size_cap;
        *out = new hc_poly{hardcore::independence_polynomial(g->g, opts)};
        return HC_OK;
    });
}

void hc_poly_free(hc_poly* p) { delete p; }

uint32_t hc_poly_alpha(const hc_poly* p) { return p ? p->p.alpha() : 0; }

uint32_t hc_poly_order(const hc_poly* p) { return p ? p->p.n : 0; }

hc_status hc_poly_coeff(const hc_poly* p, uint32_t k, char** out) {
    if (!p || !out) return fail(HC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> hc_status {
        if (k >= p->p.coeffs.size())
            return fail(HC_ERR_INVALID_ARGUMENT,
                        "coefficient index exceeds the polynomial degree");
        return give_string(p->p.coeffs[k].get_str(), out);
    });
}

hc_status hc_poly_to_json(const hc_poly* p, char** out) {
    if (!p || !out) return fail(HC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { return give_string(hardcore::to_json(p->p), out); });
}

hc_status hc_poly_eval_json(const hc_poly* p, const char* lambda, char** out) {
    if (!p || !out) return fail(HC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const mpq_class lam = positive_rational(lambda, "fugacity");
        hardcore::EvalExact e = hardcore::evaluate_exact(p->p, lam);
        return give_string(
            hardcore::eval_json(e, lam, hardcore::log_of(e.p)), out);
    });
}

hc_status hc_poly_eval_csv(const hc_poly* p, const char* lambda,
                           int with_header, char** out) {
    if (!p || !out) return fail(HC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const mpq_class lam = positive_rational(lambda, "fugacity");
        hardcore::EvalExact e = hardcore::evaluate_exact(p->p, lam);
        std::string text;
        if (with_header) text = hardcore::eval_csv_header() + "\n";
        text += hardcore::eval_csv_row(e, lam, hardcore::log_of(e.p));
        return give_string(text, out);
    });
}

hc_status hc_ratio(const hc_graph* g, const char* lambda, uint32_t size_cap,
                   char** out) {
    if (!g || !out) return fail(HC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const mpq_class lam = positive_rational(lambda, "fugacity");
        hardcore::PolyOptions opts;
        if (size_cap > 0) opts.size_cap = size_cap;
        mpq_class r = hardcore::max_to_mean_ratio(g->g, lam, opts);
        return give_string(hardcore::to_string(r), out);
    });
}

hc_status hc_lambert_w(double z, double* out) {
    if (!out) return fail(HC_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        *out = hardcore::lambert_w(z);
        return HC_OK;
    });
}

hc_status hc_occupancy_lower(uint32_t d, double lambda, double* out) {
    if (!out) return fail(HC_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        *out = hardcore::occupancy_lower_triangle_free(d, lambda);
        return HC_OK;
    });
}

hc_status hc_log_partition_lower(double n, uint32_t d, double lambda,
                                 double* out) {
    if (!out) return fail(HC_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        *out = hardcore::log_partition_lower_triangle_free(n, d, lambda);
        return HC_OK;
    });
}

hc_status hc_kdd_occupancy(uint32_t d, double lambda, double* out) {
    if (!out) return fail(HC_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        *out = hardcore::kdd_occupancy(d, lambda);
        return HC_OK;
    });
}

hc_status hc_kdd_log_partition_per_vertex(uint32_t d, double lambda,
                                          double* out) {
    if (!out) return fail(HC_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        *out = hardcore::kdd_log_partition_per_vertex(d, lambda);
        return HC_OK;
    });
}

hc_status hc_shearer_f(double d, double* out) {
    if (!out) return fail(HC_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        *out = hardcore::shearer_f(d);
        return HC_OK;
    });
}

hc_status hc_partition_exponent(double n, double lambda, double* exponent,
                                double* crossover_degree) {
    return guarded([&] {
        hardcore::PartitionExponent pe =
            hardcore::triangle_free_partition_exponent(n, lambda);
        if (exponent) *exponent = pe.exponent;
        if (crossover_degree) *crossover_degree = pe.crossover_degree;
        return HC_OK;
    });
}

hc_status hc_tree_lambda(uint32_t d, double alpha, double* out) {
    if (!out) return fail(HC_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        *out = hardcore::tree_lambda(d, alpha);
        return HC_OK;
    });
}

hc_status hc_tree_occupancy(uint32_t d, double lambda, double* alpha,
                            double* z) {
    return guarded([&] {
        hardcore::TreeFixedPoint fp = hardcore::tree_occupancy(d, lambda);
        if (alpha) *alpha = fp.alpha;
        if (z) *z = fp.z;
        return HC_OK;
    });
}

hc_status hc_sample_json(const hc_graph* g, double lambda, uint64_t seed,
                         uint64_t samples, uint64_t burn_in, uint64_t thinning,
                         char** out) {
    if (!g || !out) return fail(HC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        hardcore::SampleConfig cfg;
        cfg.lambda = lambda;
        cfg.seed = seed;
        cfg.samples = samples;
        cfg.burn_in = burn_in;
        cfg.thinning = thinning;
        hardcore::SampleStats stats = hardcore::sample_statistics(g->g, cfg);
        return give_string(
            hardcore::sample_json(hardcore::graph6::encode(g->g), cfg, stats),
            out);
    });
}

hc_status hc_random_regular(uint32_t n, uint32_t d, uint64_t seed,
                            int triangle_free, uint64_t max_attempts,
                            int want_json, char** out) {
    if (!out) return fail(HC_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        const uint64_t attempts = max_attempts == 0 ? 100000 : max_attempts;
        hardcore::RegularSample sample =
            triangle_free
                ? hardcore::random_regular_triangle_free(n, d, seed, attempts)
                : hardcore::random_regular(n, d, seed, attempts);
        const std::string g6 = hardcore::graph6::encode(sample.graph);
        return give_string(
            want_json ? hardcore::regular_sample_json(g6, sample) : g6, out);
    });
}

hc_status hc_scan_file(const char* path, const char* lambda,
                       int triangle_free, uint32_t clique_free_r,
                       uint32_t min_degree, int regular_only, uint32_t top_k,
                       uint32_t size_cap, int fmt_json, hc_line_sink sink,
                       void* sink_ctx, hc_line_sink warn_sink, void* warn_ctx,
                       uint64_t* ranked, uint64_t* filtered_out) {
    return guarded([&] {
        hardcore::ScanConfig cfg;
        cfg.lambda = positive_rational(lambda, "fugacity");
        cfg.filters.triangle_free = triangle_free != 0;
        cfg.filters.clique_free_r = clique_free_r;
        cfg.filters.min_degree = min_degree;
        cfg.filters.regular_only = regular_only != 0;
        cfg.top_k = top_k;
        if (size_cap > 0) cfg.size_cap = size_cap;

        CorpusStream corpus(path);
        hardcore::ScanResult result = hardcore::scan_ratio(corpus.stream(), cfg);
        for (const std::string& w : result.warnings) emit(warn_sink, warn_ctx, w);
        if (!fmt_json) emit(sink, sink_ctx, hardcore::ratio_csv_header());
        for (const hardcore::RatioRecord& rec : result.records)
            emit(sink, sink_ctx,
                 fmt_json ? hardcore::ratio_json_row(rec)
                          : hardcore::ratio_csv_row(rec));
        if (ranked) *ranked = result.ranked;
        if (filtered_out) *filtered_out = result.filtered_out;
        return HC_OK;
    });
}

hc_status hc_circulant_search(uint32_t n, uint32_t min_size, uint32_t max_size,
                              int triangle_free, int64_t alpha_target,
                              const char* lambda, uint32_t top_k, int fmt_json,
                              hc_line_sink sink, void* sink_ctx) {
    return guarded([&] {
        hardcore::CirculantConfig cfg;
        cfg.n = n;
        cfg.min_size = min_size;
        cfg.max_size = max_size;
        cfg.triangle_free = triangle_free != 0;
        cfg.alpha_target = alpha_target;
        cfg.lambda = positive_rational(lambda, "fugacity");
        cfg.top_k = top_k;
        hardcore::ScanResult result = hardcore::circulant_search(cfg);
        if (!fmt_json) emit(sink, sink_ctx, hardcore::ratio_csv_header());
        for (const hardcore::RatioRecord& rec : result.records)
            emit(sink, sink_ctx,
                 fmt_json ? hardcore::ratio_json_row(rec)
                          : hardcore::ratio_csv_row(rec));
        return HC_OK;
    });
}

hc_status hc_verify_bounds_file(const char* path, const char* lambda_list,
                                uint32_t size_cap, int fmt_json,
                                hc_line_sink sink, void* sink_ctx,
                                uint64_t* violations, char** summary_json) {
    return guarded([&] {
        if (!lambda_list)
            hardcore::throw_invalid("a fugacity list is required");
        std::vector<mpq_class> lambdas;
        for (const std::string& part : split_list(lambda_list))
            lambdas.push_back(positive_rational(part.c_str(), "fugacity"));

        CorpusStream corpus(path);
        if (!fmt_json) emit(sink, sink_ctx, hardcore::bound_csv_header());
        hardcore::VerifySummary summary = hardcore::verify_bounds(
            corpus.stream(), lambdas, size_cap == 0 ? 40 : size_cap,
            [&](const hardcore::BoundRow& row) {
                emit(sink, sink_ctx,
                     fmt_json ? hardcore::bound_json_row(row)
                              : hardcore::bound_csv_row(row));
            });
        if (violations) *violations = summary.violations;
        if (summary_json) {
            nlohmann::ordered_json j;
            j["graphs"] = summary.graphs;
            j["rows"] = summary.rows;
            j["skipped"] = summary.skipped;
            j["violations"] = summary.violations;
            auto slack = [](double v) {
                return v > 1e299 ? nlohmann::ordered_json(nullptr)
                                 : nlohmann::ordered_json(v);
            };
            j["min_slack_thm13"] = slack(summary.min_slack_thm13);
            j["min_slack_thm14"] = slack(summary.min_slack_thm14);
            j["min_slack_kdd"] = slack(summary.min_slack_kdd);
            j["min_slack_kdd_log"] = slack(summary.min_slack_kdd_log);
            j["notes"] = summary.notes;
            return give_string(j.dump(), summary_json);
        }
        return HC_OK;
    });
}

hc_status hc_tightness(uint32_t n, uint32_t d, const char* lambda_list,
                       const char* seed_list, uint64_t samples,
                       uint64_t burn_in, uint64_t thinning, int fmt_json,
                       hc_line_sink sink, void* sink_ctx) {
    return guarded([&] {
        if (!lambda_list || !seed_list)
            hardcore::throw_invalid("fugacity and seed lists are required");
        std::vector<double> lambdas;
        for (const std::string& part : split_list(lambda_list))
            lambdas.push_back(positive_rational(part.c_str(), "fugacity").get_d());
        std::vector<uint64_t> seeds;
        for (const std::string& part : split_list(seed_list)) {
            try {
                size_t used = 0;
                const uint64_t seed = std::stoull(part, &used);
                if (used != part.size()) throw std::invalid_argument(part);
                seeds.push_back(seed);
            } catch (const std::logic_error&) {
                hardcore::throw_invalid("seed list entry is not an unsigned integer: " +
                                        part);
            }
        }
        if (lambdas.empty() || seeds.empty())
            hardcore::throw_invalid("fugacity and seed lists must be nonempty");

        hardcore::SampleConfig proto;
        proto.samples = samples == 0 ? 100000 : samples;
        proto.burn_in = burn_in;
        proto.thinning = thinning;
        std::vector<hardcore::TightnessRow> rows =
            hardcore::tightness_experiment(n, d, lambdas, seeds, proto);
        if (!fmt_json) emit(sink, sink_ctx, hardcore::tightness_csv_header());
        for (const hardcore::TightnessRow& row : rows)
            emit(sink, sink_ctx,
                 fmt_json ? hardcore::tightness_json_row(row)
                          : hardcore::tightness_csv_row(row));
        return HC_OK;
    });
}

} // extern "C"
