#ifndef HARDCORE_BOUNDS_HPP
#define HARDCORE_BOUNDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "indpoly.hpp"

namespace hardcore {

/// Principal branch of the Lambert W function for z >= 0:
/// the unique w >= 0 with w e^w = z. Halley iteration; residual
/// |w e^w - z| <= 1e-12 * max(z, 1).
double lambert_w(double z);

/// Lower bound on the occupancy fraction of any triangle-free graph with
/// maximum degree d: (lambda/(1+lambda)) * W(d log(1+lambda)) / (d log(1+lambda)).
double occupancy_lower_triangle_free(uint32_t d, double lambda);

/// Lower bound on log P(lambda) for triangle-free graphs on n vertices with
/// maximum degree d: [W^2 + 2W] * n/(2d) at W = W(d log(1+lambda)).
double log_partition_lower_triangle_free(double n, uint32_t d, double lambda);

/// Occupancy fraction of the complete bipartite graph K_{d,d}:
/// lambda (1+lambda)^{d-1} / (2(1+lambda)^d - 1). This is also the upper
/// bound for every d-regular triangle-free graph, with equality exactly on
/// disjoint unions of K_{d,d}.
double kdd_occupancy(uint32_t d, double lambda);
mpq_class kdd_occupancy_exact(uint32_t d, const mpq_class& lambda);

/// Per-vertex log-partition of K_{d,d}: (1/(2d)) log(2(1+lambda)^d - 1),
/// an upper bound on (1/n) log P for d-regular triangle-free graphs.
double kdd_log_partition_per_vertex(uint32_t d, double lambda);

/// Shearer's independence-ratio function (d log d - d + 1)/(d-1)^2 for
/// average degree d >= 1; alpha(G) >= n * shearer_f(d) on triangle-free
/// graphs. The removable singularity at d = 1 evaluates to the continuity
/// limit 1/2 (series expansion near 1 keeps the evaluation stable).
double shearer_f(double d);

/// Degree-free lower bound on log P(lambda) for triangle-free graphs on n
/// vertices, obtained by balancing the single-neighborhood bound
/// (1+lambda)^d against the maximum-degree bound at the crossover degree.
struct PartitionExponent {
    double exponent;         ///< (1/2) sqrt(m) log m at m = n log(1+lambda)/2
    double crossover_degree; ///< (1/2) sqrt(n/(2 log(1+lambda))) log m
};
PartitionExponent triangle_free_partition_exponent(double n, double lambda);

/// Occupancy fraction of the unique translation-invariant hard-core measure
/// on the infinite d-regular tree.
struct TreeFixedPoint {
    uint32_t d = 0;
    double lambda = 0;
    double alpha = 0; ///< in (0, 1/2)
    double z = 0;     ///< alpha d / (1 - 2 alpha)
};

/// Fugacity at which the infinite d-regular tree has occupancy alpha:
/// lambda = (alpha/(1-alpha)) ((1-alpha)/(1-2 alpha))^d.
double tree_lambda(uint32_t d, double alpha);

/// Inverse of tree_lambda: solves z (1 + z/d)^{d-1} = lambda d for z
/// (the left side is strictly increasing, root bracketed in [0, lambda d]),
/// then alpha = (z/d)/(1 + 2z/d).
TreeFixedPoint tree_occupancy(uint32_t d, double lambda);

/// Coefficients of Q = P - (lambda/alpha) P' - (1/n) P', which certify
/// alpha/mean_size >= 1 + alpha/(lambda n): q[k-1] =
/// i_{k-1} (1 - (k-1)/alpha) - (k/n) i_k, all nonnegative, with zeros
/// exactly where unions of equal cliques are tight.
struct CliqueCoefficients {
    bool all_nonnegative = false;
    std::vector<mpq_class> q;
    std::vector<uint32_t> zero_indices;
};
CliqueCoefficients clique_ratio_coefficients(const IndPoly& p);

/// Level-ratio inequality (1/(k^2-1)) (k^2 i_k/i_{k-1} - n) <= i_{k+1}/i_k
/// for k = 2..alpha (with i_{alpha+1} = 0), checked in exact arithmetic.
bool moon_moser_holds(const IndPoly& p);

/// P(lambda) <= (1 + lambda n / alpha)^alpha, tight on unions of equal
/// cliques. Returned as the bound's value.
double clique_partition_upper(uint32_t n, uint32_t alpha, double lambda);
mpq_class clique_partition_upper_exact(uint32_t n, uint32_t alpha,
                                       const mpq_class& lambda);

} // namespace hardcore

#endif
