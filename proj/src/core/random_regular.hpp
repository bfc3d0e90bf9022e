#ifndef HARDCORE_RANDOM_REGULAR_HPP
#define HARDCORE_RANDOM_REGULAR_HPP

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "sampler.hpp"

namespace hardcore {

struct RegularSample {
    Graph graph;
    uint32_t n = 0;
    uint32_t d = 0;
    uint64_t seed = 0;
    uint64_t rejections_simple = 0;   ///< pairings discarded for loops/multi-edges
    uint64_t rejections_triangle = 0; ///< simple pairings discarded for triangles
};

/// Uniform simple d-regular graph on n vertices by the configuration model:
/// pair n*d half-edge stubs uniformly, restart on self-loops or repeated
/// edges. Deterministic in the seed. Throws on n*d odd, on d >= n, and when
/// max_attempts pairings were all rejected.
RegularSample random_regular(uint32_t n, uint32_t d, uint64_t seed,
                             uint64_t max_attempts = 100000);

/// As above, additionally rejecting any graph containing a triangle; the
/// result is uniform over simple triangle-free d-regular graphs.
RegularSample random_regular_triangle_free(uint32_t n, uint32_t d,
                                           uint64_t seed,
                                           uint64_t max_attempts = 100000);

/// One seeded run of the convergence experiment: sampled occupancy of a
/// random triangle-free d-regular graph against the infinite-tree value and
/// the triangle-free lower bound.
struct TightnessRow {
    uint32_t n = 0;
    uint32_t d = 0;
    double lambda = 0;
    uint64_t seed = 0;
    double occ_hat = 0;
    double std_error = 0;
    double tree_alpha = 0;
    double thm13 = 0;     ///< occupancy_lower_triangle_free(d, lambda)
    double gap_tree = 0;  ///< occ_hat - tree_alpha
    double gap_thm13 = 0; ///< occ_hat - thm13
};

/// One graph per seed, one row per (seed, lambda). The proto config supplies
/// samples/burn-in/thinning; its lambda and seed fields are overridden.
std::vector<TightnessRow> tightness_experiment(uint32_t n, uint32_t d,
                                               const std::vector<double>& lambdas,
                                               const std::vector<uint64_t>& seeds,
                                               const SampleConfig& proto);

} // namespace hardcore

#endif
