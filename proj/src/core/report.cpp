#include "report.hpp"

#include <cstdio>

#include <json.hpp>

#include "rational.hpp"

namespace hardcore {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string csv_bool(bool b) { return b ? "true" : "false"; }

} // namespace

std::string bound_csv_header() {
    return "graph6,n,d,lambda,occupancy,thm13,kdd_upper,logP_per_n,"
           "thm14_per_n,clique_ok,mm_ok";
}

std::string bound_csv_row(const BoundRow& row) {
    std::string out = row.graph6;
    out += ',' + std::to_string(row.n);
    out += ',' + std::to_string(row.d);
    out += ',' + format_double(row.lambda.get_d());
    out += ',' + format_double(row.occupancy.get_d());
    out += ',' + (row.triangle_free ? format_double(row.thm13) : std::string("na"));
    out += ',' + (row.kdd_applicable() ? format_double(row.kdd_upper.get_d())
                                       : std::string("na"));
    out += ',' + format_double(row.log_p_per_n);
    out += ',' +
           (row.triangle_free ? format_double(row.thm14_per_n) : std::string("na"));
    out += ',' + csv_bool(row.clique_ok);
    out += ',' + csv_bool(row.mm_ok);
    return out;
}

std::string bound_json_row(const BoundRow& row) {
    ordered_json j;
    j["graph6"] = row.graph6;
    j["n"] = row.n;
    j["d"] = row.d;
    j["lambda"] = row.lambda.get_d();
    j["lambda_exact"] = to_string(row.lambda);
    j["occupancy"] = row.occupancy.get_d();
    j["occupancy_exact"] = to_string(row.occupancy);
    j["thm13"] = row.triangle_free ? ordered_json(row.thm13) : ordered_json(nullptr);
    j["kdd_upper"] = row.kdd_applicable() ? ordered_json(row.kdd_upper.get_d())
                                          : ordered_json(nullptr);
    j["kdd_equality"] = row.kdd_applicable() ? ordered_json(row.kdd_equality)
                                             : ordered_json(nullptr);
    j["logP_per_n"] = row.log_p_per_n;
    j["thm14_per_n"] =
        row.triangle_free ? ordered_json(row.thm14_per_n) : ordered_json(nullptr);
    j["clique_ok"] = row.clique_ok;
    j["mm_ok"] = row.mm_ok;
    j["violations"] = row.violations;
    return j.dump();
}

std::string ratio_csv_header() {
    return "graph6,n,max_degree,alpha,mean_size,ratio,lambda";
}

std::string ratio_csv_row(const RatioRecord& rec) {
    std::string out = rec.graph6;
    out += ',' + std::to_string(rec.n);
    out += ',' + std::to_string(rec.max_degree);
    out += ',' + std::to_string(rec.alpha);
    out += ',' + to_string(rec.mean_size);
    out += ',' + to_string(rec.ratio);
    out += ',' + to_string(rec.lambda);
    return out;
}

std::string ratio_json_row(const RatioRecord& rec) {
    ordered_json j;
    j["graph6"] = rec.graph6;
    j["n"] = rec.n;
    j["max_degree"] = rec.max_degree;
    j["alpha"] = rec.alpha;
    j["mean_size"] = to_string(rec.mean_size);
    j["mean_size_real"] = rec.mean_size.get_d();
    j["ratio"] = to_string(rec.ratio);
    j["ratio_real"] = rec.ratio.get_d();
    j["lambda"] = to_string(rec.lambda);
    return j.dump();
}

std::string tightness_csv_header() {
    return "n,d,lambda,seed,occ_hat,stderr,tree_alpha,thm13,gap_tree,gap_thm13";
}

std::string tightness_csv_row(const TightnessRow& row) {
    std::string out = std::to_string(row.n);
    out += ',' + std::to_string(row.d);
    out += ',' + format_double(row.lambda);
    out += ',' + std::to_string(row.seed);
    out += ',' + format_double(row.occ_hat);
    out += ',' + format_double(row.std_error);
    out += ',' + format_double(row.tree_alpha);
    out += ',' + format_double(row.thm13);
    out += ',' + format_double(row.gap_tree);
    out += ',' + format_double(row.gap_thm13);
    return out;
}

std::string tightness_json_row(const TightnessRow& row) {
    ordered_json j;
    j["n"] = row.n;
    j["d"] = row.d;
    j["lambda"] = row.lambda;
    j["seed"] = row.seed;
    j["occ_hat"] = row.occ_hat;
    j["stderr"] = row.std_error;
    j["tree_alpha"] = row.tree_alpha;
    j["thm13"] = row.thm13;
    j["gap_tree"] = row.gap_tree;
    j["gap_thm13"] = row.gap_thm13;
    return j.dump();
}

std::string sample_json(const std::string& graph6, const SampleConfig& cfg,
                        const SampleStats& stats) {
    ordered_json j;
    j["graph6"] = graph6;
    j["lambda"] = cfg.lambda;
    j["seed"] = cfg.seed;
    j["samples"] = stats.occupancy.samples;
    j["occupancy"] = stats.occupancy.estimate;
    j["stderr"] = stats.occupancy.std_error;
    j["z_histogram"] = stats.z.counts;
    j["burn_in"] = stats.occupancy.burn_in;
    j["thinning"] = stats.occupancy.thinning;
    j["mean_z"] = stats.mean_z;
    j["identity_rhs"] = stats.identity_rhs;
    return j.dump();
}

std::string eval_csv_header() {
    return "lambda,p,log_p,mean_size,occupancy,variance";
}

std::string eval_csv_row(const EvalExact& e, const mpq_class& lambda,
                         double log_p) {
    std::string out = to_string(lambda);
    out += ',' + to_string(e.p);
    out += ',' + format_double(log_p);
    out += ',' + to_string(e.mean_size);
    out += ',' + to_string(e.occupancy);
    out += ',' + to_string(e.variance);
    return out;
}

std::string eval_json(const EvalExact& e, const mpq_class& lambda,
                      double log_p) {
    ordered_json j;
    j["lambda"] = to_string(lambda);
    j["p"] = to_string(e.p);
    j["p_prime"] = to_string(e.p_prime);
    j["log_p"] = log_p;
    j["mean_size"] = to_string(e.mean_size);
    j["mean_size_real"] = e.mean_size.get_d();
    j["occupancy"] = to_string(e.occupancy);
    j["occupancy_real"] = e.occupancy.get_d();
    j["variance"] = to_string(e.variance);
    j["variance_real"] = e.variance.get_d();
    return j.dump();
}

std::string regular_sample_json(const std::string& graph6,
                                const RegularSample& sample) {
    ordered_json j;
    j["graph6"] = graph6;
    j["n"] = sample.n;
    j["d"] = sample.d;
    j["seed"] = sample.seed;
    j["rejections_simple"] = sample.rejections_simple;
    j["rejections_triangle"] = sample.rejections_triangle;
    return j.dump();
}

} // namespace hardcore
