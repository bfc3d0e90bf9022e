#ifndef HARDCORE_SAMPLER_HPP
#define HARDCORE_SAMPLER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "graph.hpp"
#include "rng.hpp"

namespace hardcore {

/// Single-site heat-bath dynamics on the independent sets of a graph with
/// stationary law Pr[I] proportional to lambda^|I|. One step: pick a uniform
/// vertex v; if any neighbour is occupied, v becomes unoccupied; otherwise v
/// becomes occupied with probability lambda/(1+lambda). Identical seeds give
/// identical trajectories bit for bit.
class HardCoreChain {
  public:
    /// The chain observes `g` without copying it, so `g` must outlive the
    /// chain; binding a temporary graph is rejected at compile time.
    HardCoreChain(const Graph& g, double lambda, uint64_t seed,
                  uint64_t stream = 0);
    HardCoreChain(Graph&&, double, uint64_t, uint64_t = 0) = delete;

    void step();
    void run(uint64_t steps) {
        for (uint64_t i = 0; i < steps; ++i) step();
    }

    const Graph& graph() const { return *g_; }
    const VertexSet& state() const { return in_; }
    double lambda() const { return lambda_; }
    uint32_t occupied_count() const { return occupied_; }
    uint64_t steps_taken() const { return steps_; }
    bool state_is_independent() const;

  private:
    const Graph* g_;
    double lambda_;
    double occupy_prob_; ///< lambda/(1+lambda)
    VertexSet in_;
    uint32_t occupied_ = 0;
    uint64_t steps_ = 0;
    Rng rng_;
};

struct SampleConfig {
    double lambda = 1.0;
    uint64_t seed = 0;
    uint64_t samples = 100000;
    /// UINT64_MAX means the default 100 n log n.
    uint64_t burn_in = UINT64_MAX;
    /// 0 means the default of n steps between samples.
    uint64_t thinning = 0;
};

struct OccupancyEstimate {
    double estimate = 0;   ///< time average of |I|/n
    double std_error = 0;  ///< batch-means standard error, always > 0
    uint64_t samples = 0;
    uint64_t burn_in = 0;
    uint64_t thinning = 0;
};

struct ZHistogram {
    std::vector<uint64_t> counts; ///< counts[j] = probes seeing j uncovered neighbours
    uint64_t total = 0;
};

/// Everything one pass over the chain can deliver. Each sampled state is
/// probed at one uniform vertex v (observer randomness on its own stream):
/// Z = number of uncovered neighbours of v, where a vertex is uncovered when
/// none of its neighbours is occupied.
struct SampleStats {
    OccupancyEstimate occupancy;
    ZHistogram z;
    double mean_z = 0;
    double mean_decay = 0;   ///< empirical E[(1+lambda)^{-Z}]
    double identity_rhs = 0; ///< lambda/(1+lambda) * mean_decay, should equal occupancy
    double edge_lower = 0;   ///< lambda/(1+lambda) * E[Z]/max_degree, a lower bound
    /// |empirical Pr[v in I | v uncovered] - lambda/(1+lambda)|
    double fact1_gap = 0;
    /// per j: |empirical Pr[v uncovered | Z=j] - (1+lambda)^{-j}|, NaN if j unseen
    std::vector<double> fact2_gaps;
};

SampleStats sample_statistics(const Graph& g, const SampleConfig& cfg);

OccupancyEstimate estimate_occupancy(const Graph& g, const SampleConfig& cfg);
ZHistogram z_histogram(const Graph& g, const SampleConfig& cfg);

/// Requires a triangle-free graph: with a triangle the uncovered neighbours
/// need not be mutually nonadjacent and the conditional-independence value
/// (1+lambda)^{-j} is no longer the truth to test against.
std::pair<double, std::vector<double>> fact_checks(const Graph& g,
                                                   const SampleConfig& cfg);

uint64_t default_burn_in(uint32_t n);

} // namespace hardcore

#endif
