#pragma once

#include <cstdint>
#include <vector>

#include "pm/mean.hpp"
#include "pm/partition.hpp"

namespace pm {

// Sparse joint distribution of two partitions over the same vertex set:
// cell (i, j) counts vertices with label i in A and label j in B. Only
// non-zero cells are stored, sorted by (row, col).
struct ContingencyTable {
    struct Cell {
        int row = 0;
        int col = 0;
        std::int64_t count = 0;
    };

    int rows = 0;
    int cols = 0;
    std::int64_t total = 0; // number of vertices
    std::vector<std::int64_t> row_sums;
    std::vector<std::int64_t> col_sums;
    std::vector<Cell> cells;
};

ContingencyTable contingency_table(const Partition& a, const Partition& b);

// Classification of the C(n, 2) vertex pairs by agreement: n11 together in
// both partitions, n10 together only in A, n01 together only in B, n00
// separate in both. n11 + n10 + n01 + n00 = total = C(n, 2).
struct PairCounts {
    std::int64_t n11 = 0;
    std::int64_t n10 = 0;
    std::int64_t n01 = 0;
    std::int64_t n00 = 0;
    std::int64_t total = 0;

    std::int64_t intra_a() const { return n11 + n10; } // |P_A|
    std::int64_t intra_b() const { return n11 + n01; } // |P_B|
};

PairCounts pair_counts(const ContingencyTable& t);
PairCounts pair_counts(const Partition& a, const Partition& b);

// Rand index: fraction of vertex pairs on which the partitions agree.
// Requires n >= 2.
double rand_index(const PairCounts& pc);
double rand_index(const Partition& a, const Partition& b);

// Rand index adjusted for chance under the fixed-margins permutation
// model. Throws DegenerateMeasure when both partitions are trivial (both
// all-in-one or both all-singletons), where the correction is 0/0.
double adjusted_rand_index(const PairCounts& pc);
double adjusted_rand_index(const Partition& a, const Partition& b);

// Pair-counting similarity n11 / f(|P_A|, |P_B|) for a mean f. Throws
// DegenerateMeasure when the chosen mean of the intra-pair counts is zero.
double pair_similarity(const PairCounts& pc, MeanKind kind);
double pair_similarity(const Partition& a, const Partition& b, MeanKind kind);

// Shannon entropy of the part-size distribution, in nats.
double entropy(const Partition& a);

// Mutual information between the partitions' label distributions, in nats.
double mutual_information(const ContingencyTable& t);
double mutual_information(const Partition& a, const Partition& b);

// Exact expectation of the mutual information under the fixed-margins
// permutation model (hypergeometric cell distribution), in nats.
double expected_mutual_information(const ContingencyTable& t);

// Adjusted mutual information with max-entropy normalization:
// (MI - E[MI]) / (max(H_A, H_B) - E[MI]). Throws DegenerateMeasure when the
// denominator vanishes (e.g. both partitions trivial).
double adjusted_mutual_information(const Partition& a, const Partition& b);

} // namespace pm
