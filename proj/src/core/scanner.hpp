#ifndef HARDCORE_SCANNER_HPP
#define HARDCORE_SCANNER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "indpoly.hpp"

namespace hardcore {

/// One ranked graph from a ratio scan; recomputable from the graph6 string.
struct RatioRecord {
    std::string graph6;
    uint32_t n = 0;
    uint32_t max_degree = 0;
    uint32_t alpha = 0;
    mpq_class mean_size; ///< average independent-set size at lambda, exact
    mpq_class ratio;     ///< alpha / mean_size, exact, always > 1
    mpq_class lambda;
};

struct ScanFilters {
    bool triangle_free = false;
    uint32_t clique_free_r = 0; ///< 0 = off, else require no K_r
    uint32_t min_degree = 0;
    bool regular_only = false;
};

struct ScanConfig {
    mpq_class lambda = 1;
    ScanFilters filters;
    uint32_t top_k = 10;
    uint32_t size_cap = 40;
};

struct ScanResult {
    std::vector<RatioRecord> records; ///< ascending (ratio, graph6)
    uint64_t ranked = 0;              ///< graphs that passed filters
    uint64_t filtered_out = 0;
    std::vector<std::string> warnings; ///< skipped lines with line numbers
};

/// Streams graph6 lines, filters, ranks by exact ratio ascending with
/// lexicographic graph6 tie-break; memory bounded by top_k. Unreadable or
/// over-cap lines are skipped with a warning. Throws when nothing survives.
ScanResult scan_ratio(std::istream& corpus, const ScanConfig& cfg);

struct CirculantConfig {
    uint32_t n = 0;
    uint32_t min_size = 1;
    uint32_t max_size = 0; ///< 0 means floor(n/2)
    bool triangle_free = false;
    int64_t alpha_target = -1; ///< -1 = no constraint
    mpq_class lambda = 1;
    uint32_t top_k = 0; ///< 0 = keep every match
};

/// Enumerates connection sets S inside {1..floor(n/2)} with |S| in the size
/// range, keeping one representative per multiplier-equivalence class
/// (S ~ aS mod n for units a), then filters and ranks exactly as scan_ratio.
ScanResult circulant_search(const CirculantConfig& cfg);

/// Per-graph, per-lambda verification row. Bounds that need a hypothesis the
/// graph lacks (triangle-freeness, regularity) are marked not applicable.
struct BoundRow {
    std::string graph6;
    uint32_t n = 0;
    uint32_t d = 0; ///< maximum degree
    mpq_class lambda;
    mpq_class occupancy;    ///< exact
    double log_p_per_n = 0; ///< exact log P / n
    bool triangle_free = false;
    bool regular = false;
    double thm13 = 0;       ///< occupancy lower bound; valid iff triangle_free
    double thm14_per_n = 0; ///< log-partition lower bound / n; valid iff triangle_free
    mpq_class kdd_upper;    ///< exact occupancy cap; valid iff kdd_applicable()
    bool kdd_equality = false;
    double kdd_log_upper = 0; ///< per-vertex log-partition cap; same validity
    bool clique_ok = false;
    bool mm_ok = false;
    std::vector<std::string> violations;

    bool kdd_applicable() const { return regular && triangle_free && d >= 1; }
};

struct VerifySummary {
    uint64_t graphs = 0;
    uint64_t rows = 0;
    uint64_t skipped = 0;
    uint64_t violations = 0;
    // minimum observed slack of each inequality (stays huge if never applicable)
    double min_slack_thm13 = 1e300;
    double min_slack_thm14 = 1e300;
    double min_slack_kdd = 1e300;
    double min_slack_kdd_log = 1e300;
    std::vector<std::string> notes;
};

/// Evaluates every applicable bound for each corpus graph at each lambda,
/// streaming rows through the sink. Graphs beyond size_cap are skipped with
/// a note. The returned summary counts violations (expected zero: the bounds
/// are proven inequalities) and the minimum slack seen per bound.
VerifySummary verify_bounds(std::istream& corpus,
                            const std::vector<mpq_class>& lambdas,
                            uint32_t size_cap,
                            const std::function<void(const BoundRow&)>& sink);

/// Reads one corpus line as a graph; returns false at end of stream. Used by
/// every corpus consumer so header, blank-line and error handling agree.
class Graph6Reader {
  public:
    explicit Graph6Reader(std::istream& in) : in_(&in) {}
    /// Advances to the next decodable graph. Undecodable lines are reported
    /// into `warnings` with their line number and skipped.
    bool next(Graph& g, std::string& line, std::vector<std::string>& warnings);
    uint64_t line_number() const { return line_no_; }

  private:
    std::istream* in_;
    uint64_t line_no_ = 0;
};

} // namespace hardcore

#endif
