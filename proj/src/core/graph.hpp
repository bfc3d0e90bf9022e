#ifndef HARDCORE_GRAPH_HPP
#define HARDCORE_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitset.hpp"

namespace hardcore {

struct GraphStats {
    uint32_t max_degree = 0;
    uint32_t min_degree = 0;
    bool is_regular = true;
    bool triangle_free = true;
    uint32_t girth = 0; ///< length of shortest cycle; 0 means acyclic (infinite girth)
    uint64_t edge_count = 0;
};

/// Simple undirected graph on dense 0-based vertices, adjacency stored as one
/// word-packed bitset row per vertex. Immutable in spirit: built once, then
/// shared freely (all queries are const and pure).
class Graph {
public:
    Graph() = default;
    explicit Graph(uint32_t n);

    // --- classic constructors -------------------------------------------
    static Graph empty_graph(uint32_t n) { return Graph(n); }
    static Graph complete(uint32_t n);
    static Graph cycle(uint32_t n);
    static Graph path(uint32_t n);
    static Graph complete_bipartite(uint32_t a, uint32_t b);
    static Graph petersen();
    /// Cayley graph of Z_n: vertex i adjacent to i +- s (mod n) per connection s.
    /// Connections must be distinct values in [1, n/2].
    static Graph circulant(uint32_t n, const std::vector<uint32_t>& connections);
    static Graph disjoint_union(const Graph& a, const Graph& b);
    /// Parses "u v" edge lines (0-based labels, '#' comments allowed);
    /// n = 1 + max label seen.
    static Graph from_edge_list_text(std::string_view text);

    void add_edge(uint32_t u, uint32_t v);
    bool has_edge(uint32_t u, uint32_t v) const {
        return u < n_ && v < n_ && test_bit(u, v);
    }

    uint32_t order() const { return n_; }
    uint64_t edge_count() const;
    uint32_t degree(uint32_t v) const;
    uint32_t word_count() const { return words_; }

    /// Adjacency row of v as raw words (bits >= n are always zero).
    std::span<const uint64_t> row(uint32_t v) const {
        return {bits_.data() + static_cast<size_t>(v) * words_, words_};
    }

    std::vector<uint32_t> neighbors(uint32_t v) const;
    VertexSet neighbor_set(uint32_t v) const;

    GraphStats stats() const;
    bool triangle_free() const;
    /// True iff the graph contains no clique on r vertices (r >= 2).
    bool is_clique_free(uint32_t r) const;

    /// Repeatedly deletes the lowest-index vertex of degree <= threshold
    /// together with its closed neighborhood; returns the residual graph
    /// (every remaining vertex has degree > threshold), relabeled densely.
    Graph min_degree_reduce(uint32_t threshold) const;

    /// Induced subgraph on the given vertex set, relabeled densely in
    /// increasing original-label order.
    Graph induced(const VertexSet& keep) const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }

private:
    bool test_bit(uint32_t u, uint32_t v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63u)) & 1u;
    }
    void set_bit(uint32_t u, uint32_t v) {
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63u);
    }

    uint32_t n_ = 0;
    uint32_t words_ = 0;
    std::vector<uint64_t> bits_; // n_ rows of words_ words each
};

} // namespace hardcore

#endif
