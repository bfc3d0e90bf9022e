#include "bounds.hpp"

#include <cmath>

#include "errors.hpp"

namespace hardcore {

double lambert_w(double z) {
    if (!(z >= 0) || !std::isfinite(z))
        throw_invalid("lambert_w requires a finite nonnegative argument");
    if (z == 0) return 0;

    double w;
    if (z >= std::exp(1.0)) {
        const double l = std::log(z);
        w = l - std::log(l); // the classical asymptotic, exact at z = e
    } else if (z < 0.25) {
        w = z * (1 - z); // two terms of the Taylor series at 0
    } else {
        w = std::log1p(z) * 0.7;
    }

    for (int it = 0; it < 50; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - z;
        // Halley step: f' = ew (1 + w), f'' = ew (2 + w)
        const double denom = ew * (w + 1) - f * (w + 2) / (2 * (w + 1));
        const double step = f / denom;
        w -= step;
        if (std::abs(step) < 1e-15 * (1 + std::abs(w))) break;
    }
    return w;
}

double occupancy_lower_triangle_free(uint32_t d, double lambda) {
    if (d < 1) throw_invalid("maximum degree must be at least 1");
    if (!(lambda > 0)) throw_invalid("fugacity must be positive");
    const double x = d * std::log1p(lambda);
    // W(x)/x = e^{-W(x)} sidesteps the 0/0 as lambda -> 0
    return lambda / (1 + lambda) * std::exp(-lambert_w(x));
}

double log_partition_lower_triangle_free(double n, uint32_t d, double lambda) {
    if (d < 1) throw_invalid("maximum degree must be at least 1");
    if (!(lambda > 0)) throw_invalid("fugacity must be positive");
    const double w = lambert_w(d * std::log1p(lambda));
    return (w * w + 2 * w) * n / (2.0 * d);
}

double kdd_occupancy(uint32_t d, double lambda) {
    if (d < 1) throw_invalid("degree must be at least 1");
    const double t = std::pow(1 + lambda, static_cast<double>(d));
    return lambda * (t / (1 + lambda)) / (2 * t - 1);
}

mpq_class kdd_occupancy_exact(uint32_t d, const mpq_class& lambda) {
    if (d < 1) throw_invalid("degree must be at least 1");
    mpq_class one_plus = lambda + 1;
    mpq_class pow_dm1 = 1;
    for (uint32_t i = 0; i + 1 < d; ++i) pow_dm1 *= one_plus;
    mpq_class r = lambda * pow_dm1 / (2 * pow_dm1 * one_plus - 1);
    r.canonicalize();
    return r;
}

double kdd_log_partition_per_vertex(uint32_t d, double lambda) {
    if (d < 1) throw_invalid("degree must be at least 1");
    const double t = std::pow(1 + lambda, static_cast<double>(d));
    return std::log(2 * t - 1) / (2.0 * d);
}

double shearer_f(double d) {
    if (!(d >= 1)) throw_invalid("average degree must be at least 1");
    const double eps = d - 1;
    if (eps < 1e-4) // removable singularity: f -> 1/2 as d -> 1
        return 0.5 - eps / 6 + eps * eps / 12;
    return (d * std::log(d) - d + 1) / (eps * eps);
}

PartitionExponent triangle_free_partition_exponent(double n, double lambda) {
    if (!(lambda > 0)) throw_invalid("fugacity must be positive");
    const double m = n * std::log1p(lambda) / 2;
    if (!(m >= 1))
        throw_precondition("n log(1+lambda)/2 must be at least 1 for the "
                           "degree-free partition bound");
    PartitionExponent out;
    out.exponent = 0.5 * std::sqrt(m) * std::log(m);
    out.crossover_degree = 0.5 * std::sqrt(n / (2 * std::log1p(lambda))) * std::log(m);
    return out;
}

double tree_lambda(uint32_t d, double alpha) {
    if (d < 2) throw_invalid("tree degree must be at least 2");
    if (!(alpha > 0 && alpha < 0.5))
        throw_invalid("tree occupancy must lie strictly between 0 and 1/2");
    return alpha / (1 - alpha) *
           std::pow((1 - alpha) / (1 - 2 * alpha), static_cast<double>(d));
}

TreeFixedPoint tree_occupancy(uint32_t d, double lambda) {
    if (d < 2) throw_invalid("tree degree must be at least 2");
    if (!(lambda > 0)) throw_invalid("fugacity must be positive");
    const double target = lambda * d;
    // g(z) = z (1 + z/d)^{d-1} is strictly increasing with g(0) = 0 and
    // g(target) >= target, so the root lies in [0, target].
    auto g = [&](double z) {
        return z * std::pow(1 + z / d, static_cast<double>(d) - 1);
    };
    double lo = 0, hi = target;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (g(mid) < target ? lo : hi) = mid;
    }
    double z = 0.5 * (lo + hi);
    // Newton polish: g'(z) = (1+z/d)^{d-2} (1 + z/d + z(d-1)/d)
    for (int it = 0; it < 4; ++it) {
        const double base = 1 + z / d;
        const double gp = std::pow(base, static_cast<double>(d) - 2) *
                          (base + z * (d - 1.0) / d);
        z -= (g(z) - target) / gp;
    }
    TreeFixedPoint out;
    out.d = d;
    out.lambda = lambda;
    out.z = z;
    out.alpha = (z / d) / (1 + 2 * z / d);
    return out;
}

CliqueCoefficients clique_ratio_coefficients(const IndPoly& p) {
    if (p.n == 0) throw_invalid("coefficient check needs a nonempty graph");
    const uint32_t alpha = p.alpha();
    CliqueCoefficients out;
    out.all_nonnegative = true;
    out.q.resize(alpha + 1);
    for (uint32_t k = 1; k <= alpha + 1; ++k) {
        const mpz_class& prev = p.coeffs[k - 1];
        mpq_class qk = mpq_class(prev) -
                       mpq_class((k - 1) * prev) / alpha;
        if (k <= alpha) qk -= mpq_class(k * p.coeffs[k]) / p.n;
        qk.canonicalize();
        if (qk < 0) out.all_nonnegative = false;
        if (qk == 0) out.zero_indices.push_back(k - 1);
        out.q[k - 1] = qk;
    }
    return out;
}

bool moon_moser_holds(const IndPoly& p) {
    const uint32_t alpha = p.alpha();
    for (uint32_t k = 2; k <= alpha; ++k) {
        const mpz_class& below = p.coeffs[k - 1];
        const mpz_class& here = p.coeffs[k];
        const mpz_class above = k < alpha ? p.coeffs[k + 1] : mpz_class(0);
        // (k^2 i_k - n i_{k-1}) i_k <= (k^2 - 1) i_{k+1} i_{k-1}, the
        // inequality cleared of denominators (below and here are positive)
        const mpz_class ksq = mpz_class(k) * k;
        mpz_class lhs = (ksq * here - p.n * below) * here;
        mpz_class rhs = (ksq - 1) * above * below;
        if (lhs > rhs) return false;
    }
    return true;
}

double clique_partition_upper(uint32_t n, uint32_t alpha, double lambda) {
    if (alpha < 1 || alpha > n)
        throw_invalid("independence number must lie between 1 and n");
    return std::pow(1 + lambda * n / alpha, static_cast<double>(alpha));
}

mpq_class clique_partition_upper_exact(uint32_t n, uint32_t alpha,
                                       const mpq_class& lambda) {
    if (alpha < 1 || alpha > n)
        throw_invalid("independence number must lie between 1 and n");
    mpq_class base = 1 + lambda * n / alpha;
    base.canonicalize();
    mpq_class out = 1;
    for (uint32_t i = 0; i < alpha; ++i) out *= base;
    return out;
}

} // namespace hardcore
