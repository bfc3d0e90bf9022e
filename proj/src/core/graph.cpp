#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>

#include "errors.hpp"

namespace hardcore {

namespace {
constexpr uint32_t kMaxVertices = 1u << 20; // adjacency storage grows as n^2/8 bytes
}

Graph::Graph(uint32_t n) : n_(n), words_((n + 63u) / 64u) {
    if (n > kMaxVertices)
        throw_too_large("graph on " + std::to_string(n) + " vertices exceeds the supported maximum of " +
                        std::to_string(kMaxVertices));
    bits_.assign(static_cast<size_t>(n_) * words_, 0u);
}

void Graph::add_edge(uint32_t u, uint32_t v) {
    if (u >= n_ || v >= n_)
        throw_invalid("edge endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) +
                      "} on " + std::to_string(n_) + " vertices");
    if (u == v)
        throw_invalid("self-loop at vertex " + std::to_string(u));
    set_bit(u, v);
    set_bit(v, u);
}

Graph Graph::complete(uint32_t n) {
    Graph g(n);
    for (uint32_t u = 0; u + 1 < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(uint32_t n) {
    if (n < 3) throw_invalid("cycle needs at least 3 vertices");
    Graph g(n);
    for (uint32_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(uint32_t n) {
    Graph g(n);
    for (uint32_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::complete_bipartite(uint32_t a, uint32_t b) {
    Graph g(a + b);
    for (uint32_t u = 0; u < a; ++u)
        for (uint32_t v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph Graph::petersen() {
    Graph g(10);
    for (uint32_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);         // outer 5-cycle
        g.add_edge(i, i + 5);               // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return g;
}

Graph Graph::circulant(uint32_t n, const std::vector<uint32_t>& connections) {
    if (n < 1) throw_invalid("circulant needs n >= 1");
    Graph g(n);
    std::vector<bool> seen(n / 2 + 1, false);
    for (uint32_t s : connections) {
        if (s < 1 || s > n / 2)
            throw_invalid("circulant connection " + std::to_string(s) + " outside [1, " +
                          std::to_string(n / 2) + "]");
        if (seen[s]) throw_invalid("duplicate circulant connection " + std::to_string(s));
        seen[s] = true;
        for (uint32_t v = 0; v < n; ++v) g.add_edge(v, (v + s) % n);
    }
    return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (uint32_t u = 0; u < a.order(); ++u)
        for (uint32_t v : a.neighbors(u))
            if (u < v) g.add_edge(u, v);
    for (uint32_t u = 0; u < b.order(); ++u)
        for (uint32_t v : b.neighbors(u))
            if (u < v) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

Graph Graph::from_edge_list_text(std::string_view text) {
    struct Edge { uint32_t u, v; };
    std::vector<Edge> edges;
    uint32_t n = 0;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        // strip comments and whitespace-only lines
        if (size_t h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);

        uint32_t u = 0, v = 0;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        auto r1 = std::from_chars(p, end, u);
        if (r1.ec != std::errc{})
            throw_parse("edge list line " + std::to_string(line_no) + ": expected vertex label");
        p = r1.ptr;
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        auto r2 = std::from_chars(p, end, v);
        if (r2.ec != std::errc{})
            throw_parse("edge list line " + std::to_string(line_no) + ": expected second vertex label");
        p = r2.ptr;
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        if (p != end)
            throw_parse("edge list line " + std::to_string(line_no) + ": trailing characters");
        edges.push_back({u, v});
        n = std::max(n, std::max(u, v) + 1);
    }
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

uint64_t Graph::edge_count() const {
    uint64_t deg_sum = 0;
    for (uint32_t v = 0; v < n_; ++v) deg_sum += degree(v);
    return deg_sum / 2;
}

uint32_t Graph::degree(uint32_t v) const {
    uint32_t c = 0;
    for (uint64_t w : row(v)) c += static_cast<uint32_t>(std::popcount(w));
    return c;
}

std::vector<uint32_t> Graph::neighbors(uint32_t v) const {
    std::vector<uint32_t> out;
    auto r = row(v);
    for (uint32_t wi = 0; wi < words_; ++wi) {
        uint64_t w = r[wi];
        while (w) {
            out.push_back(wi * 64 + static_cast<uint32_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

VertexSet Graph::neighbor_set(uint32_t v) const {
    VertexSet s(n_);
    auto r = row(v);
    for (uint32_t wi = 0; wi < words_; ++wi) s.words()[wi] = r[wi];
    return s;
}

bool Graph::triangle_free() const {
    // a triangle exists iff two adjacent vertices share a neighbor
    for (uint32_t u = 0; u < n_; ++u) {
        auto ru = row(u);
        for (uint32_t v : neighbors(u)) {
            if (v <= u) continue;
            auto rv = row(v);
            for (uint32_t wi = 0; wi < words_; ++wi)
                if (ru[wi] & rv[wi]) return false;
        }
    }
    return true;
}

GraphStats Graph::stats() const {
    GraphStats st;
    if (n_ == 0) return st;

    uint32_t dmin = std::numeric_limits<uint32_t>::max(), dmax = 0;
    uint64_t deg_sum = 0;
    for (uint32_t v = 0; v < n_; ++v) {
        uint32_t d = degree(v);
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
        deg_sum += d;
    }
    st.min_degree = dmin;
    st.max_degree = dmax;
    st.is_regular = (dmin == dmax);
    st.edge_count = deg_sum / 2;
    st.triangle_free = triangle_free();

    // girth: BFS from every vertex; a non-tree edge (u,w) seen from root r
    // closes a walk of length depth[u]+depth[w]+1 containing a cycle no longer
    // than that, and every shortest cycle is found from its own vertices.
    uint32_t best = 0;
    std::vector<uint32_t> depth(n_);
    std::vector<int32_t> parent(n_);
    for (uint32_t r = 0; r < n_; ++r) {
        std::fill(depth.begin(), depth.end(), std::numeric_limits<uint32_t>::max());
        std::queue<uint32_t> q;
        depth[r] = 0;
        parent[r] = -1;
        q.push(r);
        while (!q.empty()) {
            uint32_t u = q.front();
            q.pop();
            if (best && 2 * depth[u] >= best) break; // deeper levels cannot improve
            for (uint32_t w : neighbors(u)) {
                if (depth[w] == std::numeric_limits<uint32_t>::max()) {
                    depth[w] = depth[u] + 1;
                    parent[w] = static_cast<int32_t>(u);
                    q.push(w);
                } else if (static_cast<int32_t>(w) != parent[u]) {
                    uint32_t len = depth[u] + depth[w] + 1;
                    if (!best || len < best) best = len;
                }
            }
        }
    }
    st.girth = best; // 0 = no cycle
    return st;
}

namespace {

// Backtracking r-clique search over candidate bitsets; prune on |cand| + size.
// Tried vertices are removed from cand, so each clique is enumerated once.
bool has_clique(const Graph& g, VertexSet cand, uint32_t size_so_far, uint32_t r) {
    if (size_so_far == r) return true;
    if (cand.count() + size_so_far < r) return false;
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
        VertexSet next(cand.capacity());
        auto rv = g.row(static_cast<uint32_t>(v));
        for (size_t wi = 0; wi < next.word_count(); ++wi)
            next.words()[wi] = cand.words()[wi] & rv[wi];
        if (has_clique(g, next, size_so_far + 1, r)) return true;
        cand.reset(static_cast<uint32_t>(v));
        if (cand.count() + size_so_far < r) return false;
    }
    return false;
}

} // namespace

bool Graph::is_clique_free(uint32_t r) const {
    if (r < 2) throw_invalid("clique order must be at least 2");
    if (r == 2) return edge_count() == 0;
    if (n_ < r) return true;
    return !has_clique(*this, VertexSet::full(n_), 0, r);
}

Graph Graph::min_degree_reduce(uint32_t threshold) const {
    VertexSet alive = VertexSet::full(n_);
    for (;;) {
        int victim = -1;
        for (int v = alive.first(); v != -1; v = alive.next(v)) {
            if (alive.count_and(row(static_cast<uint32_t>(v))) <= threshold) {
                victim = v;
                break;
            }
        }
        if (victim < 0) break;
        // remove the vertex and its surviving neighbors
        alive.subtract(row(static_cast<uint32_t>(victim)));
        alive.reset(static_cast<uint32_t>(victim));
    }
    return induced(alive);
}

Graph Graph::induced(const VertexSet& keep) const {
    std::vector<uint32_t> label(n_, std::numeric_limits<uint32_t>::max());
    uint32_t m = 0;
    for (int v = keep.first(); v != -1; v = keep.next(v))
        label[static_cast<uint32_t>(v)] = m++;
    Graph g(m);
    for (int v = keep.first(); v != -1; v = keep.next(v))
        for (uint32_t u : neighbors(static_cast<uint32_t>(v)))
            if (keep.test(u) && u > static_cast<uint32_t>(v))
                g.add_edge(label[static_cast<uint32_t>(v)], label[u]);
    return g;
}

} // namespace hardcore
