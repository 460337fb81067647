#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace pm {

// Undirected edge stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Incident edge as seen from one endpoint: the opposite vertex plus the
// index of the edge in the graph's canonical edge list.
struct Neighbor {
    int vertex = 0;
    std::size_t edge = 0;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Immutable simple undirected graph. The edge list is normalized (u < v)
// and sorted lexicographically, so an edge index is a stable, canonical
// position that classifications (bit vectors over edges) can refer to.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }
    const std::vector<Neighbor>& neighbors(int v) const { return adj_[v]; }

    friend bool operator==(const Graph&, const Graph&) = default;

    friend Graph build_graph(int n, std::vector<std::pair<int, int>> pairs);

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adj_;
};

// Validates and canonicalizes an edge list: endpoints must lie in [0, n),
// self-loops and duplicate edges (in either orientation) are rejected.
// Throws std::invalid_argument on violations.
Graph build_graph(int n, std::vector<std::pair<int, int>> pairs);

// K_n: every unordered pair is an edge.
Graph complete_graph(int n);

// True when the graph has at most one connected component (empty and
// single-vertex graphs count as connected).
bool is_connected(const Graph& g);

} // namespace pm
