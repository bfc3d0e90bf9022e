#include "random_regular.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "bounds.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace hardcore {

namespace {

constexpr uint64_t kGeneratorStream = 2; // chains use streams 0 and 1

// One pairing attempt; returns the simple graph or nothing on rejection.
bool try_pairing(uint32_t n, uint32_t d, Rng& rng, Graph& out) {
    std::vector<uint32_t> stubs(static_cast<size_t>(n) * d);
    for (size_t i = 0; i < stubs.size(); ++i)
        stubs[i] = static_cast<uint32_t>(i / d);
    for (size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[rng.uniform_below(static_cast<uint32_t>(i))]);

    Graph g(n);
    for (size_t i = 0; i < stubs.size(); i += 2) {
        const uint32_t u = stubs[i], v = stubs[i + 1];
        if (u == v || g.has_edge(u, v)) return false;
        g.add_edge(u, v);
    }
    out = std::move(g);
    return true;
}

RegularSample generate(uint32_t n, uint32_t d, uint64_t seed,
                       uint64_t max_attempts, bool require_triangle_free) {
    if (n == 0) throw_invalid("graph must have at least one vertex");
    if (d >= n)
        throw_invalid("degree " + std::to_string(d) +
                      " is not realizable on " + std::to_string(n) +
                      " vertices");
    if ((static_cast<uint64_t>(n) * d) % 2 != 0)
        throw_invalid("n*d must be even: no " + std::to_string(d) +
                      "-regular graph on " + std::to_string(n) +
                      " vertices exists");

    RegularSample sample;
    sample.n = n;
    sample.d = d;
    sample.seed = seed;

    Rng rng(seed, kGeneratorStream);
    for (uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g(0);
        if (!try_pairing(n, d, rng, g)) {
            ++sample.rejections_simple;
            continue;
        }
        if (require_triangle_free && !g.triangle_free()) {
            ++sample.rejections_triangle;
            continue;
        }
        sample.graph = std::move(g);
        return sample;
    }
    throw_budget("no acceptable pairing within " +
                 std::to_string(max_attempts) + " attempts (" +
                 std::to_string(sample.rejections_simple) +
                 " non-simple, " +
                 std::to_string(sample.rejections_triangle) +
                 " with triangles)");
}

} // namespace

RegularSample random_regular(uint32_t n, uint32_t d, uint64_t seed,
                             uint64_t max_attempts) {
    return generate(n, d, seed, max_attempts, false);
}

RegularSample random_regular_triangle_free(uint32_t n, uint32_t d,
                                           uint64_t seed,
                                           uint64_t max_attempts) {
    return generate(n, d, seed, max_attempts, true);
}

std::vector<TightnessRow> tightness_experiment(uint32_t n, uint32_t d,
                                               const std::vector<double>& lambdas,
                                               const std::vector<uint64_t>& seeds,
                                               const SampleConfig& proto) {
    if (d < 2) throw_invalid("the tree benchmark needs degree at least 2");
    std::vector<TightnessRow> rows;
    rows.reserve(lambdas.size() * seeds.size());
    for (uint64_t seed : seeds) {
        RegularSample sample = random_regular_triangle_free(n, d, seed);
        for (double lambda : lambdas) {
            SampleConfig cfg = proto;
            cfg.lambda = lambda;
            cfg.seed = seed;
            OccupancyEstimate est = estimate_occupancy(sample.graph, cfg);
            TightnessRow row;
            row.n = n;
            row.d = d;
            row.lambda = lambda;
            row.seed = seed;
            row.occ_hat = est.estimate;
            row.std_error = est.std_error;
            row.tree_alpha = tree_occupancy(d, lambda).alpha;
            row.thm13 = occupancy_lower_triangle_free(d, lambda);
            row.gap_tree = row.occ_hat - row.tree_alpha;
            row.gap_thm13 = row.occ_hat - row.thm13;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace hardcore
