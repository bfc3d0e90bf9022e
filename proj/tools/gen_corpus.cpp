// Corpus generator: writes the committed graph6 fixture files under data/.
//
//   all_n_le_8.g6                 every graph on 1..8 vertices, one per
//                                 isomorphism class, canonically labeled
//   triangle_free_n_le_8.g6      the triangle-free subset of the above
//   random_9_20.g6               500 seeded Erdos-Renyi graphs, 9 <= n <= 20
//   random_triangle_free_n_le_16.g6  1000 seeded triangle-free graphs
//   sampler_n_le_10.g6           small curated set driven by the Markov-chain
//                                 exactness checks (n <= 10)
//
// The isomorphism-class counts per order are asserted against the known
// values, which validates the whole enumeration pipeline end to end.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"
#include "rng.hpp"

namespace {

using hardcore::Graph;
using hardcore::Rng;

constexpr uint32_t kMaxEnum = 8;

/// Adjacency of a graph on at most 8 vertices, one bitmask row per vertex.
struct SmallGraph {
    uint32_t n = 0;
    std::array<uint8_t, kMaxEnum> adj{};
};

/// Packs the upper triangle row by row: bit t covers the t-th pair (i, j),
/// i < j, in lexicographic order.
uint32_t pair_bits(const SmallGraph& g, const std::array<uint8_t, kMaxEnum>& perm) {
    uint32_t bits = 0;
    uint32_t t = 0;
    for (uint32_t i = 0; i < g.n; ++i)
        for (uint32_t j = i + 1; j < g.n; ++j, ++t)
            if (g.adj[perm[i]] & (1u << perm[j])) bits |= 1u << t;
    return bits;
}

SmallGraph from_pair_bits(uint32_t n, uint32_t bits) {
    SmallGraph g;
    g.n = n;
    uint32_t t = 0;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j, ++t)
            if (bits & (1u << t)) {
                g.adj[i] |= 1u << j;
                g.adj[j] |= 1u << i;
            }
    return g;
}

/// Equitable-partition colors: start from degrees, iterate "own color plus
/// sorted neighbor colors" until the partition stabilizes.
std::array<uint8_t, kMaxEnum> refine_colors(const SmallGraph& g) {
    std::array<uint8_t, kMaxEnum> color{};
    for (uint32_t v = 0; v < g.n; ++v)
        color[v] = static_cast<uint8_t>(__builtin_popcount(g.adj[v]));
    for (uint32_t round = 0; round < g.n; ++round) {
        std::vector<std::pair<std::vector<uint8_t>, uint32_t>> sig(g.n);
        for (uint32_t v = 0; v < g.n; ++v) {
            std::vector<uint8_t> s{color[v]};
            for (uint32_t u = 0; u < g.n; ++u)
                if (g.adj[v] & (1u << u)) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::array<uint8_t, kMaxEnum> next{};
        uint8_t rank = 0;
        for (uint32_t i = 0; i < g.n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
            next[sorted[i].second] = rank;
        }
        if (next == color) break;
        color = next;
    }
    return color;
}

/// Minimum pair_bits over all vertex orderings that keep the refined color
/// classes contiguous and in color order. Exhaustive within classes, which
/// is affordable at n <= 8 (the worst case is a monochromatic 8! sweep).
uint32_t canonical_bits(const SmallGraph& g) {
    const auto color = refine_colors(g);
    std::vector<std::vector<uint8_t>> classes;
    for (uint8_t c = 0;; ++c) {
        std::vector<uint8_t> members;
        for (uint32_t v = 0; v < g.n; ++v)
            if (color[v] == c) members.push_back(static_cast<uint8_t>(v));
        if (members.empty()) break;
        classes.push_back(std::move(members));
    }

    uint32_t best = UINT32_MAX;
    std::array<uint8_t, kMaxEnum> perm{};
    auto descend = [&](auto&& self, uint32_t ci, uint32_t filled) -> void {
        if (ci == classes.size()) {
            best = std::min(best, pair_bits(g, perm));
            return;
        }
        std::vector<uint8_t>& cls = classes[ci];
        std::sort(cls.begin(), cls.end());
        do {
            for (uint32_t i = 0; i < cls.size(); ++i) perm[filled + i] = cls[i];
            self(self, ci + 1, filled + static_cast<uint32_t>(cls.size()));
        } while (std::next_permutation(cls.begin(), cls.end()));
    };
    descend(descend, 0, 0);
    return best;
}

Graph to_graph(const SmallGraph& g) {
    Graph out(g.n);
    for (uint32_t i = 0; i < g.n; ++i)
        for (uint32_t j = i + 1; j < g.n; ++j)
            if (g.adj[i] & (1u << j)) out.add_edge(i, j);
    return out;
}

bool has_triangle(const SmallGraph& g) {
    for (uint32_t i = 0; i < g.n; ++i)
        for (uint32_t j = i + 1; j < g.n; ++j)
            if ((g.adj[i] & (1u << j)) && (g.adj[i] & g.adj[j])) return true;
    return false;
}

bool is_connected(const SmallGraph& g) {
    if (g.n == 0) return false;
    uint32_t seen = 1, frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (uint32_t v = 0; v < g.n; ++v)
            if (frontier & (1u << v)) next |= g.adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << g.n) - 1;
}

/// One isomorphism-class representative per graph on 1..8 vertices, built by
/// extending each (n-1)-vertex class with every possible new neighborhood and
/// deduplicating on the canonical form. Returns per-order lists in canonical
/// order, so the output is independent of discovery order.
std::vector<std::vector<SmallGraph>> enumerate_all() {
    std::vector<std::vector<SmallGraph>> levels(kMaxEnum + 1);
    levels[1].push_back(SmallGraph{1, {}});
    for (uint32_t n = 2; n <= kMaxEnum; ++n) {
        std::set<uint32_t> keys;
        for (const SmallGraph& parent : levels[n - 1]) {
            for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                SmallGraph child = parent;
                child.n = n;
                child.adj[n - 1] = static_cast<uint8_t>(mask);
                for (uint32_t v = 0; v < n - 1; ++v)
                    if (mask & (1u << v)) child.adj[v] |= 1u << (n - 1);
                keys.insert(canonical_bits(child));
            }
        }
        for (uint32_t key : keys) levels[n].push_back(from_pair_bits(n, key));
    }
    return levels;
}

Graph random_gnp(uint32_t n, double p, uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) g.add_edge(i, j);
    return g;
}

/// Visits all vertex pairs in a random order and inserts each edge that
/// closes no triangle, with acceptance probability q to vary the density.
Graph random_triangle_free(uint32_t n, double q, uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
    for (uint32_t i = static_cast<uint32_t>(pairs.size()); i > 1; --i)
        std::swap(pairs[i - 1], pairs[rng.uniform_below(i)]);

    std::vector<uint32_t> adj(n, 0);
    Graph g(n);
    for (auto [u, v] : pairs) {
        if ((adj[u] & adj[v]) != 0) continue;
        if (!rng.bernoulli(q)) continue;
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
        g.add_edge(u, v);
    }
    return g;
}

class CorpusWriter {
  public:
    explicit CorpusWriter(const std::string& path) : path_(path), out_(path) {
        if (!out_) {
            std::cerr << "error: cannot write " << path << "\n";
            std::exit(1);
        }
    }
    void add(const Graph& g) {
        out_ << hardcore::graph6::encode(g) << "\n";
        ++count_;
    }
    void finish() {
        out_.close();
        std::cout << path_ << ": " << count_ << " graphs\n";
    }
    uint64_t count() const { return count_; }

  private:
    std::string path_;
    std::ofstream out_;
    uint64_t count_ = 0;
};

bool check_counts(const char* what, const std::vector<uint64_t>& got,
                  const std::vector<uint64_t>& want) {
    if (got == want) return true;
    std::cerr << "error: " << what << " counts diverge; got";
    for (uint64_t v : got) std::cerr << " " << v;
    std::cerr << ", want";
    for (uint64_t v : want) std::cerr << " " << v;
    std::cerr << "\n";
    return false;
}

} // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "data";

    const auto levels = enumerate_all();

    std::vector<uint64_t> all_counts, tf_counts, conn_counts;
    CorpusWriter all(dir + "/all_n_le_8.g6");
    CorpusWriter tf(dir + "/triangle_free_n_le_8.g6");
    for (uint32_t n = 1; n <= kMaxEnum; ++n) {
        uint64_t tf_here = 0, conn_here = 0;
        for (const SmallGraph& g : levels[n]) {
            const Graph graph = to_graph(g);
            all.add(graph);
            if (!has_triangle(g)) {
                tf.add(graph);
                ++tf_here;
            }
            if (is_connected(g)) ++conn_here;
        }
        all_counts.push_back(levels[n].size());
        tf_counts.push_back(tf_here);
        conn_counts.push_back(conn_here);
    }
    all.finish();
    tf.finish();

    bool ok = true;
    ok &= check_counts("graph", all_counts, {1, 2, 4, 11, 34, 156, 1044, 12346});
    ok &= check_counts("triangle-free", tf_counts, {1, 2, 3, 7, 14, 38, 107, 410});
    ok &= check_counts("connected", conn_counts,
                       {1, 1, 2, 6, 21, 112, 853, 11117});
    if (!ok) return 1;

    CorpusWriter random_mid(dir + "/random_9_20.g6");
    for (uint32_t i = 0; i < 500; ++i) {
        const uint32_t n = 9 + i % 12;
        const double p[] = {0.15, 0.3, 0.5, 0.7, 0.85};
        random_mid.add(random_gnp(n, p[i % 5], 9000 + i));
    }
    random_mid.finish();

    CorpusWriter random_tf(dir + "/random_triangle_free_n_le_16.g6");
    for (uint32_t i = 0; i < 1000; ++i) {
        const uint32_t n = 4 + i % 13;
        const double q[] = {0.3, 0.6, 1.0};
        random_tf.add(random_triangle_free(n, q[i % 3], 16000 + i));
    }
    random_tf.finish();

    // Curated Markov-chain exactness corpus: every connected graph on at
    // most 5 vertices plus assorted named graphs and unions up to n = 10.
    CorpusWriter sampler(dir + "/sampler_n_le_10.g6");
    std::set<std::string> seen;
    auto add_unique = [&](const Graph& g) {
        if (seen.insert(hardcore::graph6::encode(g)).second) sampler.add(g);
    };
    for (uint32_t n = 1; n <= 5; ++n)
        for (const SmallGraph& g : levels[n])
            if (is_connected(g)) add_unique(to_graph(g));
    for (uint32_t n = 4; n <= 10; ++n) add_unique(Graph::cycle(n));
    for (uint32_t n = 6; n <= 10; ++n) add_unique(Graph::path(n));
    for (uint32_t d = 3; d <= 5; ++d)
        add_unique(Graph::complete_bipartite(d, d));
    add_unique(Graph::petersen());
    for (uint32_t m = 5; m <= 9; m += 2)
        add_unique(Graph::complete_bipartite(1, m));
    for (uint32_t n = 6; n <= 10; ++n) add_unique(Graph::complete(n));
    add_unique(Graph::disjoint_union(Graph::cycle(5), Graph::cycle(5)));
    add_unique(Graph::disjoint_union(Graph::complete(3), Graph::path(4)));
    add_unique(Graph::disjoint_union(Graph::complete(4), Graph::complete(4)));
    add_unique(Graph::disjoint_union(Graph::cycle(4), Graph::cycle(4)));
    add_unique(random_gnp(9, 0.3, 101));
    add_unique(random_gnp(9, 0.6, 102));
    add_unique(random_gnp(10, 0.3, 103));
    add_unique(random_gnp(10, 0.6, 104));
    sampler.finish();

    std::cout << "corpus generation complete\n";
    return 0;
}
