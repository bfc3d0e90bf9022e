#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "graph.hpp"
#include "indpoly.hpp"
#include "sampler.hpp"

using hardcore::Error;
using hardcore::Graph;
using hardcore::HardCoreChain;
using hardcore::SampleConfig;

namespace {

SampleConfig cfg(double lambda, uint64_t seed, uint64_t samples) {
    SampleConfig c;
    c.lambda = lambda;
    c.seed = seed;
    c.samples = samples;
    return c;
}

} // namespace

TEST_CASE("chain states stay independent sets") {
    const Graph g = Graph::petersen();
    HardCoreChain chain(g, 5.0, 42);
    for (int i = 0; i < 100; ++i) {
        chain.run(100);
        CHECK(chain.state_is_independent());
        CHECK(chain.occupied_count() == chain.state().count());
    }
    CHECK(chain.steps_taken() == 10000);
}

TEST_CASE("trajectories are reproducible bit for bit") {
    const Graph hexagon = Graph::cycle(6);
    HardCoreChain a(hexagon, 1.5, 7);
    HardCoreChain b(hexagon, 1.5, 7);
    a.run(5000);
    b.run(5000);
    CHECK(a.state() == b.state());

    // distinct streams and seeds decorrelate
    HardCoreChain c(hexagon, 1.5, 7, /*stream=*/1);
    HardCoreChain d(hexagon, 1.5, 8);
    c.run(5000);
    d.run(5000);
    const bool all_same = a.state() == c.state() && a.state() == d.state();
    CHECK_FALSE(all_same);

    const auto e1 = hardcore::estimate_occupancy(Graph::cycle(5), cfg(1, 3, 20000));
    const auto e2 = hardcore::estimate_occupancy(Graph::cycle(5), cfg(1, 3, 20000));
    CHECK(e1.estimate == e2.estimate);
    CHECK(e1.std_error == e2.std_error);
}

TEST_CASE("single vertex: exact occupancy lambda/(1+lambda)") {
    const auto est = hardcore::estimate_occupancy(Graph::empty_graph(1),
                                                  cfg(1, 11, 50000));
    CHECK(std::abs(est.estimate - 0.5) <= 4 * est.std_error);
    CHECK(est.std_error > 0);
    CHECK(est.std_error < 0.01);

    const auto est3 = hardcore::estimate_occupancy(Graph::empty_graph(1),
                                                   cfg(3, 12, 50000));
    CHECK(std::abs(est3.estimate - 0.75) <= 4 * est3.std_error);
}

TEST_CASE("single edge: exact occupancy lambda/(1+2 lambda)") {
    const auto est = hardcore::estimate_occupancy(Graph::path(2), cfg(1, 5, 50000));
    CHECK(std::abs(est.estimate - 1.0 / 3) <= 4 * est.std_error);
}

TEST_CASE("five-cycle against the exact polynomial") {
    const auto est = hardcore::estimate_occupancy(Graph::cycle(5), cfg(1, 9, 100000));
    CHECK(std::abs(est.estimate - 3.0 / 11) <= 4 * est.std_error);
    CHECK(est.burn_in == hardcore::default_burn_in(5));
    CHECK(est.thinning == 5);
}

TEST_CASE("probe statistics: histogram, identity, edge bound") {
    const auto st = hardcore::sample_statistics(Graph::cycle(5), cfg(1, 21, 200000));

    uint64_t total = 0;
    for (uint64_t c : st.z.counts) total += c;
    CHECK(total == st.z.total);
    CHECK(st.z.total == 200000);
    CHECK(st.z.counts.size() == 3); // Z <= max degree = 2

    // occupancy equals lambda/(1+lambda) E[(1+lambda)^{-Z}] in distribution
    CHECK(std::abs(st.occupancy.estimate - st.identity_rhs) < 0.01);

    // edge bound: at most the occupancy (up to sampling noise), with
    // equality in expectation on regular graphs
    CHECK(st.edge_lower <= st.occupancy.estimate + 0.01);
    CHECK(std::abs(st.edge_lower - st.occupancy.estimate) < 0.01);

    // strict inequality case: the path P_3 is irregular
    const auto path = hardcore::sample_statistics(Graph::path(3), cfg(1, 22, 100000));
    CHECK(path.edge_lower < path.occupancy.estimate - 0.05);
}

TEST_CASE("conditional-independence diagnostics") {
    const auto [gap1, gaps2] =
        hardcore::fact_checks(Graph::cycle(5), cfg(1, 31, 200000));
    CHECK(gap1 < 0.01);
    for (double g : gaps2)
        if (!std::isnan(g)) CHECK(g < 0.02);

    CHECK_THROWS_AS(hardcore::fact_checks(Graph::complete(3), cfg(1, 1, 100)),
                    Error);
}

TEST_CASE("burn-in and thinning defaults") {
    CHECK(hardcore::default_burn_in(0) == 100);
    CHECK(hardcore::default_burn_in(1) == 100);
    CHECK(hardcore::default_burn_in(10) ==
          static_cast<uint64_t>(std::ceil(1000 * std::log(10.0))));

    SampleConfig c = cfg(1, 2, 500);
    c.burn_in = 7;
    c.thinning = 3;
    const auto est = hardcore::estimate_occupancy(Graph::cycle(4), c);
    CHECK(est.burn_in == 7);
    CHECK(est.thinning == 3);
    CHECK(est.samples == 500);
}

TEST_CASE("standard error has a floor even for frozen chains") {
    // at tiny fugacity the chain on one vertex is almost always empty
    SampleConfig c = cfg(1e-9, 4, 100);
    c.burn_in = 0;
    const auto est = hardcore::estimate_occupancy(Graph::empty_graph(1), c);
    CHECK(est.std_error >= 0.5 / (1.0 * 100));
}

TEST_CASE("input validation") {
    const Graph triangle = Graph::cycle(3);
    const Graph null_graph = Graph::empty_graph(0);
    CHECK_THROWS_AS(HardCoreChain(triangle, 0.0, 1), Error);
    CHECK_THROWS_AS(HardCoreChain(triangle, -1.0, 1), Error);
    CHECK_THROWS_AS(HardCoreChain(triangle, std::nan(""), 1), Error);
    CHECK_THROWS_AS(HardCoreChain(null_graph, 1.0, 1), Error);
    CHECK_THROWS_AS(
        hardcore::estimate_occupancy(Graph::cycle(3), cfg(1, 1, 0)), Error);
}

TEST_CASE("high fugacity drives the chain toward maximum independent sets") {
    // on K_{3,3} at lambda = 50 the chain should essentially always sit on
    // one full side: mean size near 3, occupancy near 1/2
    const auto est = hardcore::estimate_occupancy(Graph::complete_bipartite(3, 3),
                                                  cfg(50, 6, 50000));
    CHECK(est.estimate > 0.45);
    CHECK(est.estimate <= 0.5);
}
