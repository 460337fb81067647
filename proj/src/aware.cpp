#include "pm/aware.hpp"

#include <cmath>
#include <stdexcept>

#include "pm/errors.hpp"

namespace pm {

namespace {

void check_vertices(const Graph& g, const Partition& a, const Partition& b) {
    if (a.size() != g.vertex_count() || b.size() != g.vertex_count())
        throw std::invalid_argument("partition does not cover the graph's vertex set");
}

void check_edges(const EdgeCounts& c) {
    if (c.m <= 0) throw std::invalid_argument("edge-wise measure needs at least one edge");
}

// Denominator f(x, y) - x*y/m == 0 decided exactly: x*y/m equals f only at
// the boundary configurations below (both counts are in [0, m]).
bool adjusted_denominator_is_zero(MeanKind kind, std::int64_t x, std::int64_t y, std::int64_t m) {
    switch (kind) {
        case MeanKind::arithmetic: return x == y && (x == 0 || x == m);
        case MeanKind::geometric: return x * y == 0 || (x == m && y == m);
        case MeanKind::minimum: return std::min(x, y) == 0 || std::max(x, y) == m;
        case MeanKind::maximum: return std::max(x, y) == 0 || std::min(x, y) == m;
    }
    throw std::invalid_argument("unknown mean kind");
}

bool mean_is_zero(MeanKind kind, std::int64_t x, std::int64_t y) {
    switch (kind) {
        case MeanKind::arithmetic: return x == 0 && y == 0;
        case MeanKind::geometric: return x == 0 || y == 0;
        case MeanKind::minimum: return x == 0 || y == 0;
        case MeanKind::maximum: return x == 0 && y == 0;
    }
    throw std::invalid_argument("unknown mean kind");
}

} // namespace

EdgeCounts edge_counts(const Graph& g, const Partition& a, const Partition& b) {
    check_vertices(g, a, b);
    EdgeCounts c;
    c.m = static_cast<std::int64_t>(g.edge_count());
    for (const Edge& e : g.edges()) {
        const bool in_a = a.label(e.u) == a.label(e.v);
        const bool in_b = b.label(e.u) == b.label(e.v);
        if (in_a && in_b)
            ++c.a11;
        else if (in_a)
            ++c.a10;
        else if (in_b)
            ++c.a01;
        else
            ++c.a00;
    }
    return c;
}

double graph_rand_index(const EdgeCounts& c) {
    check_edges(c);
    return static_cast<double>(c.a11 + c.a00) / static_cast<double>(c.m);
}

double graph_rand_index(const Graph& g, const Partition& a, const Partition& b) {
    return graph_rand_index(edge_counts(g, a, b));
}

double graph_pair_similarity(const EdgeCounts& c, MeanKind kind) {
    check_edges(c);
    const std::int64_t x = c.norm_a();
    const std::int64_t y = c.norm_b();
    if (mean_is_zero(kind, x, y))
        throw DegenerateMeasure("edge-wise pair similarity undefined: " + to_string(kind) +
                                " of intra-edge counts is zero");
    return static_cast<double>(c.a11) /
           mean_of(kind, static_cast<double>(x), static_cast<double>(y));
}

double graph_pair_similarity(const Graph& g, const Partition& a, const Partition& b,
                             MeanKind kind) {
    return graph_pair_similarity(edge_counts(g, a, b), kind);
}

double expected_graph_pair_similarity(std::int64_t norm_a, std::int64_t norm_b, std::int64_t m,
                                      MeanKind kind) {
    if (m <= 0) throw std::invalid_argument("edge-wise expectation needs at least one edge");
    if (norm_a < 0 || norm_a > m || norm_b < 0 || norm_b > m)
        throw std::invalid_argument("intra-edge count outside [0, m]");
    if (mean_is_zero(kind, norm_a, norm_b))
        throw DegenerateMeasure("expected edge-wise pair similarity undefined: " +
                                to_string(kind) + " of intra-edge counts is zero");
    const double x = static_cast<double>(norm_a);
    const double y = static_cast<double>(norm_b);
    return x * y / (static_cast<double>(m) * mean_of(kind, x, y));
}

double expected_graph_rand_index(std::int64_t norm_a, std::int64_t norm_b, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("edge-wise expectation needs at least one edge");
    if (norm_a < 0 || norm_a > m || norm_b < 0 || norm_b > m)
        throw std::invalid_argument("intra-edge count outside [0, m]");
    const double x = static_cast<double>(norm_a);
    const double y = static_cast<double>(norm_b);
    const double md = static_cast<double>(m);
    return 1.0 - (x + y) / md + 2.0 * x * y / (md * md);
}

double adjust_similarity(double sim, double expected) {
    if (expected == 1.0)
        throw DegenerateMeasure("chance correction undefined: expected similarity is 1");
    return (sim - expected) / (1.0 - expected);
}

double adjusted_graph_pair_similarity(const EdgeCounts& c, MeanKind kind) {
    check_edges(c);
    const std::int64_t x = c.norm_a();
    const std::int64_t y = c.norm_b();
    if (adjusted_denominator_is_zero(kind, x, y, c.m))
        throw DegenerateMeasure("adjusted edge-wise pair similarity undefined: " +
                                to_string(kind) + " of intra-edge counts equals the "
                                "null expectation of their overlap");
    const double xd = static_cast<double>(x);
    const double yd = static_cast<double>(y);
    const double expected_overlap = xd * yd / static_cast<double>(c.m);
    return (static_cast<double>(c.a11) - expected_overlap) /
           (mean_of(kind, xd, yd) - expected_overlap);
}

double adjusted_graph_pair_similarity(const Graph& g, const Partition& a, const Partition& b,
                                      MeanKind kind) {
    return adjusted_graph_pair_similarity(edge_counts(g, a, b), kind);
}

double adjusted_graph_rand_index(const EdgeCounts& c) {
    return adjusted_graph_pair_similarity(c, MeanKind::arithmetic);
}

double adjusted_graph_rand_index(const Graph& g, const Partition& a, const Partition& b) {
    return adjusted_graph_rand_index(edge_counts(g, a, b));
}

} // namespace pm
