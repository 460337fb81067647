#pragma once

#include <cstdint>

#include "pm/graph.hpp"
#include "pm/mean.hpp"
#include "pm/partition.hpp"

namespace pm {

// Classification of a graph's edges by agreement between two partitions:
// a11 edges intra in both, a10 intra only in A, a01 intra only in B, a00
// inter in both. a11 + a10 + a01 + a00 = m = |E|.
struct EdgeCounts {
    std::int64_t a11 = 0;
    std::int64_t a10 = 0;
    std::int64_t a01 = 0;
    std::int64_t a00 = 0;
    std::int64_t m = 0;

    std::int64_t norm_a() const { return a11 + a10; } // |b_A|
    std::int64_t norm_b() const { return a11 + a01; } // |b_B|
};

EdgeCounts edge_counts(const Graph& g, const Partition& a, const Partition& b);

// Edge-wise Rand index (a11 + a00) / m: fraction of edges on which the
// partitions agree. Requires at least one edge.
double graph_rand_index(const EdgeCounts& c);
double graph_rand_index(const Graph& g, const Partition& a, const Partition& b);

// Edge-wise pair similarity a11 / f(|b_A|, |b_B|) for a mean f. Throws
// DegenerateMeasure when the chosen mean of the intra-edge counts is zero.
double graph_pair_similarity(const EdgeCounts& c, MeanKind kind);
double graph_pair_similarity(const Graph& g, const Partition& a, const Partition& b,
                             MeanKind kind);

// Null-model expectations under a random shuffle of each classification
// that fixes its number of intra edges: E[a11] = |b_A| * |b_B| / m.
double expected_graph_pair_similarity(std::int64_t norm_a, std::int64_t norm_b, std::int64_t m,
                                      MeanKind kind);
double expected_graph_rand_index(std::int64_t norm_a, std::int64_t norm_b, std::int64_t m);

// Standard chance correction (sim - expected) / (1 - expected). Throws
// DegenerateMeasure when expected == 1.
double adjust_similarity(double sim, double expected);

// Chance-corrected edge-wise pair similarity
// (a11 - |b_A||b_B|/m) / (f(|b_A|, |b_B|) - |b_A||b_B|/m). Throws
// DegenerateMeasure when the denominator vanishes.
double adjusted_graph_pair_similarity(const EdgeCounts& c, MeanKind kind);
double adjusted_graph_pair_similarity(const Graph& g, const Partition& a, const Partition& b,
                                      MeanKind kind);

// Edge-wise adjusted Rand index. Identical to the arithmetic-mean case of
// adjusted_graph_pair_similarity, and also to adjust_similarity applied to
// graph_rand_index with its null expectation.
double adjusted_graph_rand_index(const EdgeCounts& c);
double adjusted_graph_rand_index(const Graph& g, const Partition& a, const Partition& b);

} // namespace pm
