#include "indpoly.hpp"

#include <cmath>
#include <list>
#include <unordered_map>
#include <utility>

#include "errors.hpp"

namespace hardcore {

namespace {

using Coeffs = std::vector<mpz_class>;

// out += shift k of a (i.e. out += x^k * a)
void add_shifted(Coeffs& out, const Coeffs& a, size_t k) {
    if (out.size() < a.size() + k) out.resize(a.size() + k);
    for (size_t i = 0; i < a.size(); ++i) out[i + k] += a[i];
}

Coeffs convolve(const Coeffs& a, const Coeffs& b) {
    Coeffs out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// p *= (1 + x)^k, one binomial row at a time
void mul_one_plus_x_pow(Coeffs& p, uint32_t k) {
    for (uint32_t step = 0; step < k; ++step) {
        p.resize(p.size() + 1);
        for (size_t i = p.size() - 1; i > 0; --i) p[i] += p[i - 1];
    }
}

/// Bounded-size LRU map from vertex subsets to their polynomials.
class MemoCache {
  public:
    explicit MemoCache(size_t cap) : cap_(cap) {}

    const Coeffs* find(const VertexSet& key) {
        auto it = map_.find(key);
        if (it == map_.end()) return nullptr;
        order_.splice(order_.begin(), order_, it->second);
        return &it->second->second;
    }

    void insert(const VertexSet& key, Coeffs value) {
        order_.emplace_front(key, std::move(value));
        map_.emplace(key, order_.begin());
        while (map_.size() > cap_) {
            map_.erase(order_.back().first);
            order_.pop_back();
        }
    }

  private:
    size_t cap_;
    std::list<std::pair<VertexSet, Coeffs>> order_;
    std::unordered_map<VertexSet, std::list<std::pair<VertexSet, Coeffs>>::iterator,
                       VertexSetHash>
        map_;
};

struct Ctx {
    const Graph& g;
    MemoCache memo;
};

// Connected component of `within` containing `root`, walking only edges with
// both ends inside `within`.
VertexSet component_of(const Graph& g, const VertexSet& within, int root) {
    VertexSet comp(within.capacity());
    comp.set(static_cast<uint32_t>(root));
    std::vector<uint32_t> stack{static_cast<uint32_t>(root)};
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        VertexSet nb(within.capacity());
        nb.assign_and(g.row(v), within);
        for (int u = nb.first(); u >= 0; u = nb.next(u))
            if (!comp.test(static_cast<uint32_t>(u))) {
                comp.set(static_cast<uint32_t>(u));
                stack.push_back(static_cast<uint32_t>(u));
            }
    }
    return comp;
}

Coeffs solve_set(Ctx& ctx, VertexSet s);

// `comp` is connected with >= 2 vertices and no isolated vertex inside it.
Coeffs solve_component(Ctx& ctx, const VertexSet& comp) {
    if (const Coeffs* hit = ctx.memo.find(comp)) return *hit;

    // pivot on a vertex of maximum degree inside the component
    int pivot = -1;
    size_t best = 0;
    for (int v = comp.first(); v >= 0; v = comp.next(v)) {
        size_t deg = comp.count_and(ctx.g.row(static_cast<uint32_t>(v)));
        if (deg >= best) {
            best = deg;
            pivot = v;
        }
    }

    VertexSet without_v = comp;
    without_v.reset(static_cast<uint32_t>(pivot));
    Coeffs result = solve_set(ctx, without_v);

    VertexSet without_closed = without_v;
    without_closed.subtract(ctx.g.row(static_cast<uint32_t>(pivot)));
    add_shifted(result, solve_set(ctx, without_closed), 1);

    ctx.memo.insert(comp, result);
    return result;
}

Coeffs solve_set(Ctx& ctx, VertexSet s) {
    // vertices with no surviving neighbour contribute a (1 + x) factor each
    uint32_t isolated = 0;
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (!s.intersects(ctx.g.row(static_cast<uint32_t>(v)))) {
            ++isolated;
            s.reset(static_cast<uint32_t>(v));
        }

    Coeffs result{mpz_class(1)};
    while (true) {
        int root = s.first();
        if (root < 0) break;
        VertexSet comp = component_of(ctx.g, s, root);
        s.subtract_set(comp);
        result = convolve(result, solve_component(ctx, comp));
    }
    mul_one_plus_x_pow(result, isolated);
    return result;
}

mpq_class require_nonneg(const mpq_class& lambda) {
    if (lambda < 0) throw_invalid("fugacity must be nonnegative");
    return lambda;
}

} // namespace

mpz_class IndPoly::total() const {
    mpz_class t = 0;
    for (const mpz_class& c : coeffs) t += c;
    return t;
}

IndPoly independence_polynomial(const Graph& g, const PolyOptions& opts) {
    if (g.order() > opts.size_cap)
        throw_too_large("graph on " + std::to_string(g.order()) +
                        " vertices exceeds the exact-mode cap of " +
                        std::to_string(opts.size_cap) +
                        "; use the Glauber sampler for larger graphs");
    Ctx ctx{g, MemoCache(opts.memo_entry_cap)};
    IndPoly out;
    out.n = g.order();
    out.coeffs = solve_set(ctx, VertexSet::full(g.order()));
    return out;
}

IndPoly brute_force_counts(const Graph& g) {
    const uint32_t n = g.order();
    if (n > 24)
        throw_too_large("brute-force oracle is limited to 24 vertices");

    std::vector<uint32_t> adj(n, 0);
    for (uint32_t v = 0; v < n; ++v)
        for (uint32_t u : g.neighbors(v)) adj[v] |= 1u << u;

    const size_t total = size_t{1} << n;
    std::vector<uint8_t> ok(total, 0);
    ok[0] = 1;
    IndPoly out;
    out.n = n;
    out.coeffs.assign(1, mpz_class(1)); // the empty set
    for (size_t mask = 1; mask < total; ++mask) {
        const uint32_t v = static_cast<uint32_t>(__builtin_ctzll(mask));
        const size_t rest = mask & (mask - 1);
        if (ok[rest] && (adj[v] & rest) == 0) {
            ok[mask] = 1;
            const int k = __builtin_popcountll(mask);
            if (static_cast<size_t>(k) >= out.coeffs.size())
                out.coeffs.resize(static_cast<size_t>(k) + 1);
            out.coeffs[static_cast<size_t>(k)] += 1;
        }
    }
    return out;
}

EvalExact evaluate_exact(const IndPoly& poly, const mpq_class& lambda) {
    require_nonneg(lambda);
    // Horner for P, P' and P'' simultaneously
    mpq_class p = 0, d1 = 0, d2 = 0;
    for (size_t i = poly.coeffs.size(); i-- > 0;) {
        d2 = d2 * lambda + 2 * d1;
        d1 = d1 * lambda + p;
        p = p * lambda + poly.coeffs[i];
    }
    EvalExact out;
    out.p = p;
    out.p_prime = d1;
    out.mean_size = lambda * d1 / p;
    out.mean_size.canonicalize();
    out.occupancy = out.mean_size / poly.n;
    out.occupancy.canonicalize();
    out.variance = (lambda * d1 + lambda * lambda * d2) / p -
                   out.mean_size * out.mean_size;
    out.variance.canonicalize();
    return out;
}

EvalReal evaluate(const IndPoly& poly, double lambda) {
    EvalExact e = evaluate_exact(poly, rational_from_double(lambda));
    EvalReal out;
    out.p = e.p.get_d();
    out.log_p = log_of(e.p);
    out.p_prime = e.p_prime.get_d();
    out.mean_size = e.mean_size.get_d();
    out.occupancy = e.occupancy.get_d();
    out.variance = e.variance.get_d();
    return out;
}

double log_partition(const IndPoly& poly, const mpq_class& lambda) {
    require_nonneg(lambda);
    mpq_class p = 0;
    for (size_t i = poly.coeffs.size(); i-- > 0;)
        p = p * lambda + poly.coeffs[i];
    return log_of(p);
}

mpq_class max_to_mean_ratio(const IndPoly& poly, const mpq_class& lambda) {
    if (poly.n == 0) throw_invalid("ratio is undefined on the empty graph");
    EvalExact e = evaluate_exact(poly, lambda);
    if (e.mean_size == 0)
        throw_invalid("ratio requires positive fugacity");
    mpq_class r = mpq_class(poly.alpha()) / e.mean_size;
    r.canonicalize();
    return r;
}

mpq_class max_to_mean_ratio(const Graph& g, const mpq_class& lambda,
                            const PolyOptions& opts) {
    return max_to_mean_ratio(independence_polynomial(g, opts), lambda);
}

namespace {

// Var(|I|) at lambda = e^u; the substitution t = e^u turns
// integral of Var/t dt into integral of Var du.
double variance_at_log(const IndPoly& poly, double u) {
    return evaluate(poly, std::exp(u)).variance;
}

double simpson(const IndPoly& poly, double a, double b, double fa, double fm,
               double fb, double whole, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = variance_at_log(poly, lm);
    const double frm = variance_at_log(poly, rm);
    const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 1e-12)
        return left + right;
    return simpson(poly, a, m, fa, flm, fm, left, depth - 1) +
           simpson(poly, m, b, fm, frm, fb, right, depth - 1);
}

} // namespace

double integral_identity_residual(const Graph& g, double lambda_max,
                                  uint32_t panels, const PolyOptions& opts) {
    if (!(lambda_max >= 1))
        throw_invalid("integration endpoint must be at least 1");
    if (panels == 0) throw_invalid("at least one quadrature panel is required");
    IndPoly poly = independence_polynomial(g, opts);
    double integral = 0;
    const double u_max = std::log(lambda_max);
    for (uint32_t i = 0; i < panels; ++i) {
        const double a = u_max * i / panels;
        const double b = u_max * (i + 1) / panels;
        const double m = 0.5 * (a + b);
        const double fa = variance_at_log(poly, a);
        const double fm = variance_at_log(poly, m);
        const double fb = variance_at_log(poly, b);
        const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
        integral += simpson(poly, a, b, fa, fm, fb, whole, 24);
    }
    const double mean_at_one = evaluate(poly, 1.0).mean_size;
    return static_cast<double>(poly.alpha()) - (mean_at_one + integral);
}

std::string to_json(const IndPoly& poly) {
    std::string out = "{\"n\":" + std::to_string(poly.n) + ",\"coeffs\":[";
    for (size_t i = 0; i < poly.coeffs.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += poly.coeffs[i].get_str();
        out += '"';
    }
    out += "],\"alpha\":" + std::to_string(poly.alpha()) + "}";
    return out;
}

} // namespace hardcore
