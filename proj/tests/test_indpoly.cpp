#include <doctest.h>

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "indpoly.hpp"
#include "rng.hpp"

using hardcore::Error;
using hardcore::EvalExact;
using hardcore::Graph;
using hardcore::IndPoly;
using hardcore::PolyOptions;

namespace {

std::vector<mpz_class> coeffs_of(const Graph& g) {
    return hardcore::independence_polynomial(g).coeffs;
}

Graph random_gnp(uint32_t n, double p, uint64_t seed) {
    hardcore::Rng rng(seed);
    Graph g(n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) g.add_edge(i, j);
    return g;
}

/// Independent recurrence oracle for paths and cycles: with P_k the path
/// polynomial on k vertices, P_k = P_{k-1} + x P_{k-2} (branch on an end
/// vertex) and C_k = P_{k-1} + x P_{k-3}.
std::vector<mpz_class> path_poly(uint32_t k);

std::vector<mpz_class> add_shift(const std::vector<mpz_class>& a,
                                 const std::vector<mpz_class>& b) {
    // a + x*b
    std::vector<mpz_class> out(std::max(a.size(), b.size() + 1), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i + 1] += b[i];
    return out;
}

std::vector<mpz_class> path_poly(uint32_t k) {
    std::vector<std::vector<mpz_class>> p(k + 1);
    p[0] = {1};
    if (k >= 1) p[1] = {1, 1};
    for (uint32_t i = 2; i <= k; ++i) p[i] = add_shift(p[i - 1], p[i - 2]);
    return p[k];
}

std::vector<mpz_class> cycle_poly(uint32_t k) {
    REQUIRE(k >= 3);
    return add_shift(path_poly(k - 1), path_poly(k - 3));
}

} // namespace

TEST_CASE("hand-checked coefficient anchors") {
    CHECK(coeffs_of(Graph::cycle(5)) == std::vector<mpz_class>{1, 5, 5});
    CHECK(coeffs_of(Graph::path(4)) == std::vector<mpz_class>{1, 4, 3});
    CHECK(coeffs_of(Graph::complete(3)) == std::vector<mpz_class>{1, 3});
    CHECK(coeffs_of(Graph::empty_graph(3)) == std::vector<mpz_class>{1, 3, 3, 1});
    CHECK(coeffs_of(Graph::petersen()) ==
          std::vector<mpz_class>{1, 10, 30, 30, 5});
    CHECK(coeffs_of(Graph::complete_bipartite(3, 3)) ==
          std::vector<mpz_class>{1, 6, 6, 2});
    CHECK(coeffs_of(Graph::empty_graph(0)) == std::vector<mpz_class>{1});

    const IndPoly pet = hardcore::independence_polynomial(Graph::petersen());
    CHECK(pet.n == 10);
    CHECK(pet.alpha() == 4);
    CHECK(pet.total() == 76);
}

TEST_CASE("agrees with the exhaustive subset oracle on random graphs") {
    for (uint32_t n = 1; n <= 14; ++n) {
        for (double p : {0.15, 0.5, 0.85}) {
            const Graph g = random_gnp(n, p, 1000 * n + static_cast<uint64_t>(p * 100));
            const IndPoly fast = hardcore::independence_polynomial(g);
            const IndPoly slow = hardcore::brute_force_counts(g);
            REQUIRE(fast.coeffs == slow.coeffs);
            CHECK(fast.n == slow.n);
        }
    }
}

TEST_CASE("agrees with the path/cycle recurrence oracle") {
    for (uint32_t k = 1; k <= 30; ++k)
        CHECK(coeffs_of(Graph::path(k)) == path_poly(k));
    for (uint32_t k = 3; k <= 30; ++k)
        CHECK(coeffs_of(Graph::cycle(k)) == cycle_poly(k));
}

TEST_CASE("cycle on 100 vertices: exact independent-set count") {
    PolyOptions opts;
    opts.size_cap = 100;
    const IndPoly c100 = hardcore::independence_polynomial(Graph::cycle(100), opts);
    CHECK(c100.alpha() == 50);
    CHECK(c100.total() == mpz_class("792070839848372253127"));
    // the recurrence oracle agrees coefficient by coefficient
    CHECK(c100.coeffs == cycle_poly(100));
}

TEST_CASE("multiplicative over disjoint unions") {
    const Graph a = random_gnp(7, 0.4, 11);
    const Graph b = random_gnp(6, 0.6, 12);
    const auto pa = coeffs_of(a), pb = coeffs_of(b);
    const auto pu = coeffs_of(Graph::disjoint_union(a, b));
    std::vector<mpz_class> prod(pa.size() + pb.size() - 1, 0);
    for (size_t i = 0; i < pa.size(); ++i)
        for (size_t j = 0; j < pb.size(); ++j) prod[i + j] += pa[i] * pb[j];
    CHECK(pu == prod);
}

TEST_CASE("isolated vertices contribute binomial factors") {
    PolyOptions wide;
    wide.size_cap = 64;
    const auto p = hardcore::independence_polynomial(Graph::empty_graph(64), wide).coeffs;
    REQUIRE(p.size() == 65);
    mpz_class total = 0;
    for (const mpz_class& c : p) total += c;
    CHECK(total == mpz_class(1) << 64);
    CHECK(p[32] == mpz_class("1832624140942590534")); // C(64,32)
}

TEST_CASE("memoization bounds do not change results") {
    PolyOptions tiny;
    tiny.memo_entry_cap = 4; // constant eviction pressure
    const Graph g = random_gnp(16, 0.3, 77);
    CHECK(hardcore::independence_polynomial(g, tiny).coeffs ==
          hardcore::independence_polynomial(g).coeffs);
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(hardcore::independence_polynomial(Graph::empty_graph(41)),
                    Error);
    PolyOptions wide;
    wide.size_cap = 50;
    CHECK_NOTHROW(hardcore::independence_polynomial(Graph::empty_graph(41), wide));
    CHECK_THROWS_AS(hardcore::brute_force_counts(Graph::empty_graph(25)), Error);
}

TEST_CASE("exact evaluation on the 5-cycle") {
    const IndPoly c5 = hardcore::independence_polynomial(Graph::cycle(5));

    const EvalExact at1 = hardcore::evaluate_exact(c5, 1);
    CHECK(at1.p == 11);
    CHECK(at1.p_prime == 15);
    CHECK(at1.mean_size == mpq_class(15, 11));
    CHECK(at1.occupancy == mpq_class(3, 11));
    CHECK(at1.variance == mpq_class(50, 121));

    const EvalExact at_half = hardcore::evaluate_exact(c5, mpq_class(1, 2));
    CHECK(at_half.p == mpq_class(19, 4));
    CHECK(at_half.mean_size == mpq_class(20, 19));
    CHECK(at_half.variance == mpq_class(170, 361));

    const EvalExact at0 = hardcore::evaluate_exact(c5, 0);
    CHECK(at0.p == 1);
    CHECK(at0.mean_size == 0);

    CHECK_THROWS_AS(hardcore::evaluate_exact(c5, mpq_class(-1, 2)), Error);
}

TEST_CASE("double-precision evaluation tracks the exact one") {
    const IndPoly c5 = hardcore::independence_polynomial(Graph::cycle(5));
    const auto e = hardcore::evaluate(c5, 1.0);
    CHECK(e.p == doctest::Approx(11).epsilon(1e-14));
    CHECK(e.log_p == doctest::Approx(std::log(11.0)).epsilon(1e-14));
    CHECK(e.mean_size == doctest::Approx(15.0 / 11).epsilon(1e-14));
    CHECK(e.variance == doctest::Approx(50.0 / 121).epsilon(1e-14));
    CHECK(hardcore::log_partition(c5, 1) ==
          doctest::Approx(std::log(11.0)).epsilon(1e-14));

    // log stays finite and accurate when P(lambda) overflows a double
    PolyOptions opts;
    opts.size_cap = 100;
    const IndPoly e100 =
        hardcore::independence_polynomial(Graph::empty_graph(100), opts);
    const auto big = hardcore::evaluate(e100, 1e6);
    CHECK(big.log_p == doctest::Approx(100 * std::log1p(1e6)).epsilon(1e-12));
    CHECK(big.occupancy == doctest::Approx(1e6 / (1 + 1e6)).epsilon(1e-12));
}

TEST_CASE("mean size approaches alpha as the fugacity grows") {
    const IndPoly c5 = hardcore::independence_polynomial(Graph::cycle(5));
    const EvalExact e = hardcore::evaluate_exact(c5, 1000000000);
    CHECK(mpq_class(2) - e.mean_size > 0);
    CHECK(mpq_class(2) - e.mean_size < mpq_class(1, 100000000));
}

TEST_CASE("mean size is strictly increasing in the fugacity") {
    const IndPoly pet = hardcore::independence_polynomial(Graph::petersen());
    mpq_class prev = -1;
    for (int k = 1; k <= 20; ++k) {
        const mpq_class lam(k, 7);
        const mpq_class mean = hardcore::evaluate_exact(pet, lam).mean_size;
        CHECK(mean > prev);
        prev = mean;
    }
}

TEST_CASE("maximum-to-average ratio") {
    CHECK(hardcore::max_to_mean_ratio(Graph::complete(3), 1) == mpq_class(4, 3));
    CHECK(hardcore::max_to_mean_ratio(Graph::cycle(5), 1) == mpq_class(22, 15));
    for (uint32_t n = 1; n <= 8; ++n)
        CHECK(hardcore::max_to_mean_ratio(Graph::complete(n), 1) ==
              mpq_class(n + 1, n));
    CHECK_THROWS_AS(hardcore::max_to_mean_ratio(Graph::empty_graph(0), 1), Error);
}

TEST_CASE("integrated variance reproduces the mean-size increment") {
    // alpha - [mean(1) + integral_1^L Var/lambda] telescopes to
    // alpha - mean(L); both sides are computable exactly.
    const Graph c5 = Graph::cycle(5);
    const IndPoly poly = hardcore::independence_polynomial(c5);
    for (double lmax : {2.0, 10.0, 100.0}) {
        const double residual = hardcore::integral_identity_residual(c5, lmax);
        const EvalExact at = hardcore::evaluate_exact(
            poly, hardcore::rational_from_double(lmax));
        const double expect = 2 - at.mean_size.get_d();
        CHECK(residual == doctest::Approx(expect).epsilon(1e-9));
    }

    // single vertex: residual at L is exactly 1 - L/(1+L)
    const double r = hardcore::integral_identity_residual(Graph::empty_graph(1), 1000);
    CHECK(r == doctest::Approx(1.0 / 1001).epsilon(1e-9));

    // residual is positive and decreasing in the upper limit
    const double r10 = hardcore::integral_identity_residual(c5, 10);
    const double r100 = hardcore::integral_identity_residual(c5, 100);
    CHECK(r10 > r100);
    CHECK(r100 > 0);
}

TEST_CASE("JSON rendering") {
    const IndPoly c5 = hardcore::independence_polynomial(Graph::cycle(5));
    CHECK(hardcore::to_json(c5) ==
          "{\"n\":5,\"coeffs\":[\"1\",\"5\",\"5\"],\"alpha\":2}");
}

TEST_CASE("corpus subset cross-check against the oracle") {
    std::ifstream in(std::string(HC_DATA_DIR) + "/all_n_le_8.g6");
    REQUIRE(in.good());
    std::string line;
    size_t index = 0;
    while (std::getline(in, line)) {
        if (index++ % 97 != 0) continue; // deterministic sparse sample
        const Graph g = hardcore::graph6::decode(line);
        CHECK(hardcore::independence_polynomial(g).coeffs ==
              hardcore::brute_force_counts(g).coeffs);
    }
    CHECK(index == 13598);
}
