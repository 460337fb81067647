#include "pm/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pm/union_find.hpp"

namespace pm {

Graph build_graph(int n, std::vector<std::pair<int, int>> pairs) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");

    for (auto& [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ") with n = " +
                                        std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(pairs.begin(), pairs.end());
    auto dup = std::adjacent_find(pairs.begin(), pairs.end());
    if (dup != pairs.end())
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + ", " +
                                    std::to_string(dup->second) + ")");

    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (const auto& [u, v] : pairs) g.edges_.push_back(Edge{u, v});
    g.adj_.assign(n, {});
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        g.adj_[e.u].push_back(Neighbor{e.v, i});
        g.adj_[e.v].push_back(Neighbor{e.u, i});
    }
    return g;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return build_graph(n, std::move(pairs));
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    UnionFind uf(g.vertex_count());
    for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
    return uf.component_count() == 1;
}

} // namespace pm
