#include "sampler.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace hardcore {

uint64_t default_burn_in(uint32_t n) {
    if (n < 2) return 100;
    return static_cast<uint64_t>(std::ceil(100.0 * n * std::log(n)));
}

HardCoreChain::HardCoreChain(const Graph& g, double lambda, uint64_t seed,
                             uint64_t stream)
    : g_(&g), lambda_(lambda), occupy_prob_(lambda / (1 + lambda)),
      in_(g.order()), rng_(seed, stream) {
    if (!(lambda > 0) || !std::isfinite(lambda))
        throw_invalid("fugacity must be positive and finite");
    if (g.order() == 0) throw_invalid("cannot sample the empty graph");
}

void HardCoreChain::step() {
    const uint32_t v = rng_.uniform_below(g_->order());
    const bool was_in = in_.test(v);
    if (in_.intersects(g_->row(v))) {
        // a neighbour is occupied, so the conditional law forces v out;
        // v itself cannot have been occupied (the state is independent)
        if (was_in) {
            in_.reset(v);
            --occupied_;
        }
    } else if (rng_.uniform01() < occupy_prob_) {
        if (!was_in) {
            in_.set(v);
            ++occupied_;
        }
    } else if (was_in) {
        in_.reset(v);
        --occupied_;
    }
    ++steps_;
}

bool HardCoreChain::state_is_independent() const {
    for (int v = in_.first(); v >= 0; v = in_.next(v))
        if (in_.intersects(g_->row(static_cast<uint32_t>(v)))) return false;
    return true;
}

namespace {

bool vertex_uncovered(const Graph& g, const VertexSet& in, uint32_t v) {
    return !in.intersects(g.row(v));
}

} // namespace

SampleStats sample_statistics(const Graph& g, const SampleConfig& cfg) {
    if (cfg.samples < 1) throw_invalid("at least one sample is required");
    const uint32_t n = g.order();
    const uint64_t burn =
        cfg.burn_in == UINT64_MAX ? default_burn_in(n) : cfg.burn_in;
    const uint64_t thin = cfg.thinning == 0 ? n : cfg.thinning;
    const uint32_t dmax = g.stats().max_degree;

    HardCoreChain chain(g, cfg.lambda, cfg.seed, /*stream=*/0);
    Rng probe_rng(cfg.seed, /*stream=*/1);
    chain.run(burn);

    std::vector<double> decay(dmax + 1);
    for (uint32_t j = 0; j <= dmax; ++j)
        decay[j] = std::pow(1 + cfg.lambda, -static_cast<double>(j));

    SampleStats out;
    out.z.counts.assign(dmax + 1, 0);

    // batch means over (up to) 100 equal batches for the standard error
    const uint64_t nbatches = cfg.samples < 200 ? 1 : 100;
    const uint64_t batch_len = cfg.samples / nbatches;
    double batch_sum = 0, batch_mean_sum = 0, batch_mean_sq_sum = 0;
    uint64_t batches_done = 0, in_batch = 0;

    double occ_sum = 0, z_sum = 0, decay_sum = 0;
    uint64_t uncovered_probes = 0, occupied_probes = 0;
    std::vector<uint64_t> uncovered_given_z(dmax + 1, 0);

    for (uint64_t s = 0; s < cfg.samples; ++s) {
        chain.run(thin);
        const double frac = static_cast<double>(chain.occupied_count()) / n;
        occ_sum += frac;
        if (batches_done < nbatches) {
            batch_sum += frac;
            if (++in_batch == batch_len) {
                const double m = batch_sum / batch_len;
                batch_mean_sum += m;
                batch_mean_sq_sum += m * m;
                ++batches_done;
                batch_sum = 0;
                in_batch = 0;
            }
        }

        const uint32_t v = probe_rng.uniform_below(n);
        uint32_t z = 0;
        for (uint32_t u : g.neighbors(v))
            if (vertex_uncovered(g, chain.state(), u)) ++z;
        out.z.counts[z] += 1;
        z_sum += z;
        decay_sum += decay[z];
        if (vertex_uncovered(g, chain.state(), v)) {
            ++uncovered_probes;
            ++uncovered_given_z[z];
            if (chain.state().test(v)) ++occupied_probes;
        }
    }

    out.z.total = cfg.samples;
    out.mean_z = z_sum / cfg.samples;
    out.mean_decay = decay_sum / cfg.samples;
    const double ratio = cfg.lambda / (1 + cfg.lambda);
    out.identity_rhs = ratio * out.mean_decay;
    out.edge_lower = dmax == 0 ? 0.0 : ratio * out.mean_z / dmax;

    out.occupancy.estimate = occ_sum / cfg.samples;
    out.occupancy.samples = cfg.samples;
    out.occupancy.burn_in = burn;
    out.occupancy.thinning = thin;
    double se = 0;
    if (batches_done >= 2) {
        const double mean = batch_mean_sum / batches_done;
        const double var =
            (batch_mean_sq_sum - batches_done * mean * mean) /
            (batches_done - 1);
        se = std::sqrt(std::max(var, 0.0) / batches_done);
    }
    // a degenerate (all-identical) batch history still has at least the
    // one-quantum discretization uncertainty
    const double se_floor = 0.5 / (static_cast<double>(n) * cfg.samples);
    out.occupancy.std_error = std::max(se, se_floor);

    out.fact1_gap =
        uncovered_probes == 0
            ? std::numeric_limits<double>::quiet_NaN()
            : std::abs(static_cast<double>(occupied_probes) / uncovered_probes -
                       ratio);
    out.fact2_gaps.assign(dmax + 1,
                          std::numeric_limits<double>::quiet_NaN());
    for (uint32_t j = 0; j <= dmax; ++j)
        if (out.z.counts[j] > 0)
            out.fact2_gaps[j] =
                std::abs(static_cast<double>(uncovered_given_z[j]) /
                             out.z.counts[j] -
                         decay[j]);
    return out;
}

OccupancyEstimate estimate_occupancy(const Graph& g, const SampleConfig& cfg) {
    return sample_statistics(g, cfg).occupancy;
}

ZHistogram z_histogram(const Graph& g, const SampleConfig& cfg) {
    return sample_statistics(g, cfg).z;
}

std::pair<double, std::vector<double>> fact_checks(const Graph& g,
                                                   const SampleConfig& cfg) {
    if (!g.triangle_free())
        throw_precondition(
            "conditional-independence checks require a triangle-free graph: "
            "uncovered neighbours must form an independent set");
    SampleStats st = sample_statistics(g, cfg);
    return {st.fact1_gap, std::move(st.fact2_gaps)};
}

} // namespace hardcore
