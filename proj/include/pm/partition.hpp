#pragma once

#include <cstdint>
#include <vector>

namespace pm {

// Partition of {0, ..., n-1} into non-empty parts, stored as one label per
// vertex. Labels are canonical: parts are numbered 0, 1, 2, ... in order of
// first appearance, so two equal partitions always compare equal.
class Partition {
public:
    Partition() = default;

    // Canonicalizes arbitrary non-negative labels. Throws
    // std::invalid_argument on negative labels.
    explicit Partition(std::vector<int> labels);

    // Builds from explicit member lists; the parts must be disjoint and
    // cover {0, ..., n-1} exactly. Throws std::invalid_argument otherwise.
    static Partition from_parts(int n, const std::vector<std::vector<int>>& parts);

    int size() const { return static_cast<int>(labels_.size()); }
    int part_count() const { return part_count_; }
    int label(int v) const { return labels_[v]; }
    const std::vector<int>& labels() const { return labels_; }

    // Part sizes indexed by canonical label.
    std::vector<std::int64_t> part_sizes() const;

    // Members of each part in ascending vertex order, indexed by label.
    std::vector<std::vector<int>> members() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> labels_;
    int part_count_ = 0;
};

Partition all_in_one(int n);
Partition singletons(int n);

// Number of unordered vertex pairs that share a part: sum over parts of
// C(size, 2).
std::int64_t intra_pair_count(const Partition& a);

// True when every part of `finer` is contained in a single part of
// `coarser`. Partitions must cover the same vertex set.
bool is_refinement(const Partition& finer, const Partition& coarser);

} // namespace pm
