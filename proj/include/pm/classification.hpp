#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pm/graph.hpp"
#include "pm/partition.hpp"

namespace pm {

// Binary vector over a graph's canonical edge list. Bit i is 1 when edge i
// is considered intra-cluster. Length always equals the edge count of the
// graph it was built against.
class EdgeClassification {
public:
    EdgeClassification() = default;
    explicit EdgeClassification(std::vector<std::uint8_t> bits);
    static EdgeClassification zeros(std::size_t m);

    std::size_t size() const { return bits_.size(); }
    bool test(std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }

    // Number of set bits (the vector's L1 norm).
    std::int64_t count() const;

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    friend bool operator==(const EdgeClassification&, const EdgeClassification&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// b_A: bit i is 1 iff both endpoints of edge i share a part in `a`.
EdgeClassification edge_classification(const Graph& g, const Partition& a);

// Partition whose parts are the connected components of the subgraph kept
// by the set bits of `b` (plus singletons for untouched vertices). Part ids
// are canonicalized by first vertex appearance.
Partition induced_partition(const Graph& g, const EdgeClassification& b);

// Canonical representative of b's equivalence class: the elementwise
// maximum over all classifications inducing the same partition, computed as
// edge_classification(g, induced_partition(g, b)).
EdgeClassification class_representative(const Graph& g, const EdgeClassification& b);

// True when every part of `a` induces a connected subgraph of g. Such
// partitions are exactly the fixed points of class_representative applied
// to their edge classification.
bool is_connected_partition(const Graph& g, const Partition& a);

} // namespace pm
