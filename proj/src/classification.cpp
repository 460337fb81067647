#include "pm/classification.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pm/union_find.hpp"

namespace pm {

EdgeClassification::EdgeClassification(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_)
        if (b > 1) throw std::invalid_argument("classification bits must be 0 or 1");
}

EdgeClassification EdgeClassification::zeros(std::size_t m) {
    return EdgeClassification(std::vector<std::uint8_t>(m, 0));
}

std::int64_t EdgeClassification::count() const {
    return std::count(bits_.begin(), bits_.end(), std::uint8_t{1});
}

namespace {

void check_length(const Graph& g, const EdgeClassification& b) {
    if (b.size() != g.edge_count())
        throw std::invalid_argument("classification length " + std::to_string(b.size()) +
                                    " does not match edge count " +
                                    std::to_string(g.edge_count()));
}

void check_vertices(const Graph& g, const Partition& a) {
    if (a.size() != g.vertex_count())
        throw std::invalid_argument("partition covers " + std::to_string(a.size()) +
                                    " vertices, graph has " +
                                    std::to_string(g.vertex_count()));
}

} // namespace

EdgeClassification edge_classification(const Graph& g, const Partition& a) {
    check_vertices(g, a);
    std::vector<std::uint8_t> bits(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        bits[i] = a.label(e.u) == a.label(e.v) ? 1 : 0;
    }
    return EdgeClassification(std::move(bits));
}

Partition induced_partition(const Graph& g, const EdgeClassification& b) {
    check_length(g, b);
    UnionFind uf(g.vertex_count());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b.test(i)) uf.unite(g.edge(i).u, g.edge(i).v);
    std::vector<int> labels(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) labels[v] = uf.find(v);
    return Partition(std::move(labels));
}

EdgeClassification class_representative(const Graph& g, const EdgeClassification& b) {
    return edge_classification(g, induced_partition(g, b));
}

bool is_connected_partition(const Graph& g, const Partition& a) {
    check_vertices(g, a);
    return induced_partition(g, edge_classification(g, a)) == a;
}

} // namespace pm
