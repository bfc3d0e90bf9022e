#include "scanner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "bounds.hpp"
#include "errors.hpp"
#include "graph6.hpp"

namespace hardcore {

namespace {

bool record_less(const RatioRecord& a, const RatioRecord& b) {
    const int c = cmp(a.ratio, b.ratio);
    if (c != 0) return c < 0;
    return a.graph6 < b.graph6;
}

bool passes(const Graph& g, const GraphStats& st, const ScanFilters& f) {
    if (f.triangle_free && !st.triangle_free) return false;
    if (f.clique_free_r >= 2 && !g.is_clique_free(f.clique_free_r)) return false;
    if (st.min_degree < f.min_degree) return false;
    if (f.regular_only && !st.is_regular) return false;
    return true;
}

RatioRecord make_record(const Graph& g, const IndPoly& poly,
                        const mpq_class& lambda, const GraphStats& st) {
    RatioRecord rec;
    rec.graph6 = graph6::encode(g);
    rec.n = g.order();
    rec.max_degree = st.max_degree;
    rec.alpha = poly.alpha();
    EvalExact e = evaluate_exact(poly, lambda);
    rec.mean_size = e.mean_size;
    rec.ratio = mpq_class(rec.alpha) / e.mean_size;
    rec.ratio.canonicalize();
    rec.lambda = lambda;
    return rec;
}

/// Keeps the k smallest records (k = 0 means unbounded).
class TopK {
  public:
    explicit TopK(uint32_t k) : k_(k) {}

    void insert(RatioRecord rec) {
        set_.insert(std::move(rec));
        if (k_ > 0 && set_.size() > k_) set_.erase(std::prev(set_.end()));
    }

    std::vector<RatioRecord> take() {
        return {set_.begin(), set_.end()};
    }

  private:
    uint32_t k_;
    std::multiset<RatioRecord, bool (*)(const RatioRecord&, const RatioRecord&)>
        set_{&record_less};
};

} // namespace

bool Graph6Reader::next(Graph& g, std::string& line,
                        std::vector<std::string>& warnings) {
    while (std::getline(*in_, line)) {
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        try {
            g = graph6::decode(line);
            return true;
        } catch (const Error& e) {
            warnings.push_back("line " + std::to_string(line_no_) +
                               " skipped: " + e.what());
        }
    }
    return false;
}

ScanResult scan_ratio(std::istream& corpus, const ScanConfig& cfg) {
    if (cfg.top_k < 1) throw_invalid("top_k must be at least 1");
    if (!(cfg.lambda > 0)) throw_invalid("fugacity must be positive");

    ScanResult out;
    TopK best(cfg.top_k);
    PolyOptions opts;
    opts.size_cap = cfg.size_cap;

    Graph6Reader reader(corpus);
    Graph g;
    std::string line;
    while (reader.next(g, line, out.warnings)) {
        if (g.order() == 0) {
            out.warnings.push_back("line " + std::to_string(reader.line_number()) +
                                   " skipped: ratio undefined on the empty graph");
            continue;
        }
        const GraphStats st = g.stats();
        if (!passes(g, st, cfg.filters)) {
            ++out.filtered_out;
            continue;
        }
        IndPoly poly;
        try {
            poly = independence_polynomial(g, opts);
        } catch (const Error& e) {
            out.warnings.push_back("line " + std::to_string(reader.line_number()) +
                                   " skipped: " + std::string(e.what()));
            continue;
        }
        ++out.ranked;
        best.insert(make_record(g, poly, cfg.lambda, st));
    }
    if (out.ranked == 0)
        throw_precondition("no graphs passed the filters");
    out.records = best.take();
    return out;
}

namespace {

uint32_t fold_mod(uint64_t x, uint32_t n) {
    const uint32_t r = static_cast<uint32_t>(x % n);
    return r <= n / 2 ? r : n - r;
}

// true iff s is the lexicographically least set in its multiplier class
bool multiplier_canonical(uint32_t n, const std::vector<uint32_t>& s) {
    std::vector<uint32_t> mapped(s.size());
    for (uint32_t a = 2; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        for (size_t i = 0; i < s.size(); ++i)
            mapped[i] = fold_mod(static_cast<uint64_t>(a) * s[i], n);
        std::sort(mapped.begin(), mapped.end());
        if (mapped < s) return false;
    }
    return true;
}

template <typename Fn>
void for_each_subset(uint32_t m, uint32_t k, Fn&& fn) {
    std::vector<uint32_t> s(k);
    std::iota(s.begin(), s.end(), 1u);
    if (k > m) return;
    while (true) {
        fn(s);
        // next k-combination of {1..m} in lexicographic order
        size_t i = k;
        while (i > 0 && s[i - 1] == m - (k - i)) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

} // namespace

ScanResult circulant_search(const CirculantConfig& cfg) {
    if (cfg.n < 3) throw_invalid("circulant search needs at least 3 vertices");
    const uint32_t m = cfg.n / 2;
    const uint32_t lo = std::max(cfg.min_size, 1u);
    const uint32_t hi = std::min(cfg.max_size == 0 ? m : cfg.max_size, m);

    ScanResult out;
    TopK best(cfg.top_k);
    PolyOptions opts;
    opts.size_cap = std::max(40u, cfg.n); // the search is exact by contract

    for (uint32_t k = lo; k <= hi; ++k) {
        for_each_subset(m, k, [&](const std::vector<uint32_t>& s) {
            if (!multiplier_canonical(cfg.n, s)) return;
            Graph g = Graph::circulant(cfg.n, s);
            const GraphStats st = g.stats();
            if (cfg.triangle_free && !st.triangle_free) {
                ++out.filtered_out;
                return;
            }
            IndPoly poly = independence_polynomial(g, opts);
            if (cfg.alpha_target >= 0 &&
                poly.alpha() != static_cast<uint32_t>(cfg.alpha_target)) {
                ++out.filtered_out;
                return;
            }
            ++out.ranked;
            best.insert(make_record(g, poly, cfg.lambda, st));
        });
    }
    out.records = best.take();
    return out;
}

VerifySummary verify_bounds(std::istream& corpus,
                            const std::vector<mpq_class>& lambdas,
                            uint32_t size_cap,
                            const std::function<void(const BoundRow&)>& sink) {
    if (lambdas.empty()) throw_invalid("at least one fugacity is required");
    for (const mpq_class& l : lambdas)
        if (!(l > 0)) throw_invalid("fugacities must be positive");

    VerifySummary summary;
    PolyOptions opts;
    opts.size_cap = size_cap;

    Graph6Reader reader(corpus);
    Graph g;
    std::string line;
    while (reader.next(g, line, summary.notes)) {
        if (g.order() == 0) {
            ++summary.skipped;
            summary.notes.push_back("line " + std::to_string(reader.line_number()) +
                                    " skipped: empty graph");
            continue;
        }
        IndPoly poly;
        try {
            poly = independence_polynomial(g, opts);
        } catch (const Error& e) {
            ++summary.skipped;
            summary.notes.push_back("line " + std::to_string(reader.line_number()) +
                                    " skipped: " + std::string(e.what()));
            continue;
        }
        ++summary.graphs;
        const GraphStats st = g.stats();
        const std::string g6 = graph6::encode(g);
        const bool coeffs_ok = clique_ratio_coefficients(poly).all_nonnegative;
        const bool mm = moon_moser_holds(poly);

        for (const mpq_class& lambda : lambdas) {
            BoundRow row;
            row.graph6 = g6;
            row.n = g.order();
            row.d = st.max_degree;
            row.lambda = lambda;
            row.triangle_free = st.triangle_free;
            row.regular = st.is_regular;

            EvalExact e = evaluate_exact(poly, lambda);
            row.occupancy = e.occupancy;
            row.log_p_per_n = log_of(e.p) / row.n;
            const double lam = lambda.get_d();
            const double occ = row.occupancy.get_d();

            if (row.triangle_free) {
                // a graph of maximum degree 0 still has maximum degree <= 1
                const uint32_t d_eff = std::max(row.d, 1u);
                row.thm13 = occupancy_lower_triangle_free(d_eff, lam);
                row.thm14_per_n =
                    log_partition_lower_triangle_free(1.0, d_eff, lam);
                const double slack13 = occ - row.thm13;
                const double slack14 = row.log_p_per_n - row.thm14_per_n;
                summary.min_slack_thm13 = std::min(summary.min_slack_thm13, slack13);
                summary.min_slack_thm14 = std::min(summary.min_slack_thm14, slack14);
                if (slack13 < -1e-12 * std::max(1.0, row.thm13))
                    row.violations.push_back("occupancy_lower");
                if (slack14 < -1e-9)
                    row.violations.push_back("log_partition_lower");
            }
            if (row.kdd_applicable()) {
                row.kdd_upper = kdd_occupancy_exact(row.d, lambda);
                const int c = cmp(row.occupancy, row.kdd_upper);
                row.kdd_equality = c == 0;
                if (c > 0) row.violations.push_back("kdd_occupancy_upper");
                summary.min_slack_kdd =
                    std::min(summary.min_slack_kdd,
                             mpq_class(row.kdd_upper - row.occupancy).get_d());
                row.kdd_log_upper = kdd_log_partition_per_vertex(row.d, lam);
                const double slack_log = row.kdd_log_upper - row.log_p_per_n;
                summary.min_slack_kdd_log =
                    std::min(summary.min_slack_kdd_log, slack_log);
                if (slack_log < -1e-9)
                    row.violations.push_back("kdd_log_partition_upper");
            }
            row.clique_ok =
                coeffs_ok &&
                e.p <= clique_partition_upper_exact(row.n, poly.alpha(), lambda);
            if (!row.clique_ok) row.violations.push_back("clique_partition_upper");
            row.mm_ok = mm;
            if (!mm) row.violations.push_back("moon_moser");

            summary.rows += 1;
            summary.violations += row.violations.size();
            if (sink) sink(row);
        }
    }
    return summary;
}

} // namespace hardcore
