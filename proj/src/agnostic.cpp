#include "pm/agnostic.hpp"

#include "pm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace pm {

namespace {

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

double log_factorial(std::int64_t x) { return std::lgamma(static_cast<double>(x) + 1.0); }

void check_same_size(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("partitions cover different vertex sets");
}

} // namespace

ContingencyTable contingency_table(const Partition& a, const Partition& b) {
    check_same_size(a, b);
    ContingencyTable t;
    t.rows = a.part_count();
    t.cols = b.part_count();
    t.total = a.size();
    t.row_sums.assign(t.rows, 0);
    t.col_sums.assign(t.cols, 0);

    std::unordered_map<std::int64_t, std::int64_t> counts;
    counts.reserve(static_cast<std::size_t>(a.size()));
    for (int v = 0; v < a.size(); ++v) {
        const int i = a.label(v);
        const int j = b.label(v);
        ++t.row_sums[i];
        ++t.col_sums[j];
        ++counts[static_cast<std::int64_t>(i) * t.cols + j];
    }
    t.cells.reserve(counts.size());
    for (const auto& [key, count] : counts)
        t.cells.push_back({static_cast<int>(key / t.cols), static_cast<int>(key % t.cols), count});
    std::sort(t.cells.begin(), t.cells.end(), [](const auto& x, const auto& y) {
        return x.row != y.row ? x.row < y.row : x.col < y.col;
    });
    return t;
}

PairCounts pair_counts(const ContingencyTable& t) {
    PairCounts pc;
    pc.total = choose2(t.total);
    std::int64_t intra_a = 0, intra_b = 0;
    for (std::int64_t s : t.row_sums) intra_a += choose2(s);
    for (std::int64_t s : t.col_sums) intra_b += choose2(s);
    for (const auto& cell : t.cells) pc.n11 += choose2(cell.count);
    pc.n10 = intra_a - pc.n11;
    pc.n01 = intra_b - pc.n11;
    pc.n00 = pc.total - pc.n11 - pc.n10 - pc.n01;
    return pc;
}

PairCounts pair_counts(const Partition& a, const Partition& b) {
    return pair_counts(contingency_table(a, b));
}

double rand_index(const PairCounts& pc) {
    if (pc.total <= 0) throw std::invalid_argument("rand index needs at least two vertices");
    return static_cast<double>(pc.n11 + pc.n00) / static_cast<double>(pc.total);
}

double rand_index(const Partition& a, const Partition& b) {
    return rand_index(pair_counts(a, b));
}

double adjusted_rand_index(const PairCounts& pc) {
    if (pc.total <= 0) throw std::invalid_argument("adjusted rand index needs at least two vertices");
    const std::int64_t pa = pc.intra_a();
    const std::int64_t pb = pc.intra_b();
    // The denominator mean(pa, pb) - pa*pb/total vanishes exactly when both
    // partitions are all-in-one or both are all-singletons.
    if (pa == pb && (pa == 0 || pa == pc.total))
        throw DegenerateMeasure("adjusted rand index undefined for two trivial partitions");
    const double expected = static_cast<double>(pa) * static_cast<double>(pb) /
                            static_cast<double>(pc.total);
    return (static_cast<double>(pc.n11) - expected) /
           ((static_cast<double>(pa) + static_cast<double>(pb)) / 2.0 - expected);
}

double adjusted_rand_index(const Partition& a, const Partition& b) {
    return adjusted_rand_index(pair_counts(a, b));
}

namespace {

// f(x, y) == 0 exactly, decided in integer arithmetic per mean kind.
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

double pair_similarity(const PairCounts& pc, MeanKind kind) {
    const std::int64_t pa = pc.intra_a();
    const std::int64_t pb = pc.intra_b();
    if (mean_is_zero(kind, pa, pb))
        throw DegenerateMeasure("pair similarity undefined: " + to_string(kind) +
                                " of intra-pair counts is zero");
    return static_cast<double>(pc.n11) /
           mean_of(kind, static_cast<double>(pa), static_cast<double>(pb));
}

double pair_similarity(const Partition& a, const Partition& b, MeanKind kind) {
    return pair_similarity(pair_counts(a, b), kind);
}

double entropy(const Partition& a) {
    if (a.size() == 0) return 0.0;
    const double n = static_cast<double>(a.size());
    double h = 0.0;
    for (std::int64_t s : a.part_sizes()) {
        const double p = static_cast<double>(s) / n;
        h -= p * std::log(p);
    }
    return h;
}

double mutual_information(const ContingencyTable& t) {
    if (t.total == 0) return 0.0;
    const double n = static_cast<double>(t.total);
    double mi = 0.0;
    for (const auto& cell : t.cells) {
        const double pij = static_cast<double>(cell.count) / n;
        const double pi = static_cast<double>(t.row_sums[cell.row]) / n;
        const double pj = static_cast<double>(t.col_sums[cell.col]) / n;
        mi += pij * std::log(pij / (pi * pj));
    }
    return mi;
}

double mutual_information(const Partition& a, const Partition& b) {
    return mutual_information(contingency_table(a, b));
}

double expected_mutual_information(const ContingencyTable& t) {
    // Exact expectation over tables with the given margins: each cell count
    // is hypergeometric. Terms are assembled in log space to keep the
    // factorials finite.
    const std::int64_t n = t.total;
    if (n == 0) return 0.0;
    const double nd = static_cast<double>(n);
    const double lfact_n = log_factorial(n);
    double emi = 0.0;
    for (std::int64_t ai : t.row_sums) {
        const double lfact_ai = log_factorial(ai);
        const double lfact_n_ai = log_factorial(n - ai);
        for (std::int64_t bj : t.col_sums) {
            const std::int64_t lo = std::max<std::int64_t>(1, ai + bj - n);
            const std::int64_t hi = std::min(ai, bj);
            for (std::int64_t nij = lo; nij <= hi; ++nij) {
                const double log_prob = lfact_ai + log_factorial(bj) + lfact_n_ai +
                                        log_factorial(n - bj) - lfact_n - log_factorial(nij) -
                                        log_factorial(ai - nij) - log_factorial(bj - nij) -
                                        log_factorial(n - ai - bj + nij);
                const double info = std::log(nd * static_cast<double>(nij) /
                                             (static_cast<double>(ai) * static_cast<double>(bj)));
                emi += (static_cast<double>(nij) / nd) * info * std::exp(log_prob);
            }
        }
    }
    return emi;
}

double adjusted_mutual_information(const Partition& a, const Partition& b) {
    const ContingencyTable t = contingency_table(a, b);
    const double mi = mutual_information(t);
    const double emi = expected_mutual_information(t);
    const double h_max = std::max(entropy(a), entropy(b));
    const double denominator = h_max - emi;
    if (std::abs(denominator) <= 1e-12 * std::max(1.0, std::abs(h_max)))
        throw DegenerateMeasure("adjusted mutual information undefined: "
                                "max entropy equals its expected value");
    return (mi - emi) / denominator;
}

} // namespace pm
