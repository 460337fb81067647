#pragma once

#include <cstdint>
#include <vector>

#include "pm/graph.hpp"
#include "pm/partition.hpp"
#include "pm/rng.hpp"

namespace pm {

// Planted-partition random graph: given a ground-truth partition, exactly
// intra_edges edges are drawn uniformly without replacement from the
// intra-part vertex pairs and exactly inter_edges from the inter-part
// pairs.
struct PlantedSpec {
    Partition truth;
    std::int64_t intra_edges = 0;
    std::int64_t inter_edges = 0;

    std::int64_t intra_pairs() const;              // |P_A|
    std::int64_t inter_pairs() const;              // C(n,2) - |P_A|
    double intra_density() const;                  // p
    double inter_density() const;                  // q
    void validate() const;                         // throws std::invalid_argument

    // Rounds densities p and q to the nearest feasible edge counts.
    static PlantedSpec from_densities(Partition truth, double p, double q);
};

Graph planted_partition_graph(const PlantedSpec& spec, Seed seed);

// G(n, m): exactly m edges drawn uniformly without replacement from all
// C(n, 2) vertex pairs.
Graph erdos_renyi_graph(int n, std::int64_t m, Seed seed);

// Uniform random labeled tree on n vertices (decoded from a uniform
// Prüfer sequence).
Graph random_tree(int n, Seed seed);

// Edge indices of a depth-first-search spanning tree grown from a uniform
// root with uniformly shuffled neighbor orders. Throws
// std::invalid_argument when the graph is disconnected.
std::vector<std::size_t> dfs_spanning_tree(const Graph& g, Seed seed);

// Random connected partition with exactly k parts: grows a random DFS
// spanning tree and deletes k - 1 of its edges uniformly at random; the
// parts are the components left behind. Requires a connected graph and
// 1 <= k <= n.
Partition random_partition_process1(const Graph& g, int k, Seed seed);

// Random connected partition driven by edge selection: picks k of the m
// edges uniformly without replacement and returns the partition induced by
// the components of the selected subgraph. Requires 0 <= k <= m.
Partition random_partition_process2(const Graph& g, std::int64_t k, Seed seed);

// Repeatedly merges two uniformly chosen parts until target_parts remain.
// Requires 1 <= target_parts < a.part_count(). The result is coarser than
// `a` by construction.
Partition random_coarsening(const Partition& a, int target_parts, Seed seed);

// Repeatedly splits a uniformly chosen splittable part with a random
// balanced bipartition until target_parts exist. Requires
// a.part_count() < target_parts <= n. The result is finer than `a`.
Partition random_refinement(const Partition& a, int target_parts, Seed seed);

// Uniform sample of `count` distinct values from {0, ..., space - 1} via a
// sparse partial Fisher-Yates pass; memory is O(count) regardless of
// space. Order of the returned values is the sampling order.
std::vector<std::uint64_t> sample_distinct(std::uint64_t space, std::uint64_t count, Rng& rng);

} // namespace pm
