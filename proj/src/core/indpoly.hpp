#ifndef HARDCORE_INDPOLY_HPP
#define HARDCORE_INDPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace hardcore {

/// Independence polynomial P_G: coeffs[k] = number of independent sets of
/// size k, exactly. The degree is the independence number alpha(G).
struct IndPoly {
    uint32_t n = 0; ///< vertex count of the source graph
    std::vector<mpz_class> coeffs;

    uint32_t alpha() const { return static_cast<uint32_t>(coeffs.size()) - 1; }
    mpz_class total() const; ///< P(1) = number of independent sets
};

struct PolyOptions {
    uint32_t size_cap = 40;        ///< exact-mode vertex cap
    size_t memo_entry_cap = 1u << 20; ///< LRU bound on memoized subproblems
};

/// Exact coefficients by branching on a maximum-degree pivot,
/// P = P(G - v) + x * P(G - N[v]), with connected-component factorization,
/// isolated-vertex stripping and subset memoization. Single-threaded per
/// call; distinct calls are independent.
IndPoly independence_polynomial(const Graph& g, const PolyOptions& opts = {});

/// Independent oracle: enumerates all 2^n subsets (n <= 24) and counts the
/// independent ones by size. Shares no code path with the recursion above.
IndPoly brute_force_counts(const Graph& g);

inline uint32_t independence_number(const IndPoly& p) { return p.alpha(); }

/// Hard-core quantities at a fixed fugacity, exact-rational throughout.
struct EvalExact {
    mpq_class p;         ///< P(lambda)
    mpq_class p_prime;   ///< P'(lambda)
    mpq_class mean_size; ///< lambda P'/P, the average independent-set size
    mpq_class occupancy; ///< mean_size / n
    mpq_class variance;  ///< Var(|I|) = (lambda P' + lambda^2 P'')/P - mean^2
};
EvalExact evaluate_exact(const IndPoly& p, const mpq_class& lambda);

/// Double-precision view of the same quantities. Ratios are computed in
/// exact arithmetic first (the double lambda is taken at its exact binary
/// value) and rounded once, so log_p stays accurate even when p overflows.
struct EvalReal {
    double p = 0;
    double log_p = 0;
    double p_prime = 0;
    double mean_size = 0;
    double occupancy = 0;
    double variance = 0;
};
EvalReal evaluate(const IndPoly& p, double lambda);

double log_partition(const IndPoly& p, const mpq_class& lambda);

/// alpha(G) / mean_size(lambda), exact. Always > 1 on nonempty graphs.
mpq_class max_to_mean_ratio(const IndPoly& p, const mpq_class& lambda);
mpq_class max_to_mean_ratio(const Graph& g, const mpq_class& lambda,
                            const PolyOptions& opts = {});

/// alpha(G) - [mean_size(1) + integral over [1, lambda_max] of Var/lambda],
/// quadrature by adaptive Simpson on log lambda over `panels` initial panels.
/// Positive and decreasing in lambda_max.
double integral_identity_residual(const Graph& g, double lambda_max,
                                  uint32_t panels = 16,
                                  const PolyOptions& opts = {});

/// {"n":…, "coeffs":["1","5","5"], "alpha":…} with decimal-string coefficients.
std::string to_json(const IndPoly& p);

} // namespace hardcore

#endif
