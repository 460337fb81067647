#include "pm/partition.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace pm {

Partition::Partition(std::vector<int> labels) : labels_(std::move(labels)) {
    std::unordered_map<int, int> canon;
    canon.reserve(labels_.size());
    for (int& l : labels_) {
        if (l < 0) throw std::invalid_argument("negative part label " + std::to_string(l));
        l = canon.try_emplace(l, static_cast<int>(canon.size())).first->second;
    }
    part_count_ = static_cast<int>(canon.size());
}

Partition Partition::from_parts(int n, const std::vector<std::vector<int>>& parts) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<int> labels(n, -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) throw std::invalid_argument("empty part in partition");
        for (int v : parts[p]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
            if (labels[v] != -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " listed in two parts");
            labels[v] = static_cast<int>(p);
        }
    }
    for (int v = 0; v < n; ++v)
        if (labels[v] == -1)
            throw std::invalid_argument("vertex " + std::to_string(v) + " missing from partition");
    return Partition(std::move(labels));
}

std::vector<std::int64_t> Partition::part_sizes() const {
    std::vector<std::int64_t> sizes(part_count_, 0);
    for (int l : labels_) ++sizes[l];
    return sizes;
}

std::vector<std::vector<int>> Partition::members() const {
    std::vector<std::vector<int>> out(part_count_);
    for (int v = 0; v < size(); ++v) out[labels_[v]].push_back(v);
    return out;
}

Partition all_in_one(int n) { return Partition(std::vector<int>(n, 0)); }

Partition singletons(int n) {
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v;
    return Partition(std::move(labels));
}

std::int64_t intra_pair_count(const Partition& a) {
    std::int64_t total = 0;
    for (std::int64_t s : a.part_sizes()) total += s * (s - 1) / 2;
    return total;
}

bool is_refinement(const Partition& finer, const Partition& coarser) {
    if (finer.size() != coarser.size())
        throw std::invalid_argument("partitions cover different vertex sets");
    std::vector<int> image(finer.part_count(), -1);
    for (int v = 0; v < finer.size(); ++v) {
        int& img = image[finer.label(v)];
        if (img == -1)
            img = coarser.label(v);
        else if (img != coarser.label(v))
            return false;
    }
    return true;
}

} // namespace pm
