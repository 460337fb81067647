#include "pm/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "pm/classification.hpp"
#include "pm/union_find.hpp"

namespace pm {

namespace {

// Lexicographically ordered pairs (u, v) with u < v over n vertices,
// addressed by a flat index. base(n, u) counts the pairs whose first
// coordinate is smaller than u.
struct AllPairSpace {
    int n;

    explicit AllPairSpace(int n) : n(n) {}

    std::uint64_t size() const {
        return static_cast<std::uint64_t>(n) * (n - 1) / 2;
    }

    static std::uint64_t base(int n, int u) {
        return static_cast<std::uint64_t>(u) * (n - 1) -
               static_cast<std::uint64_t>(u) * (u - 1) / 2;
    }

    // Largest u with base(n, u) <= t, assuming 2 <= span and t < C(span, 2).
    static int first_of(int span, std::uint64_t t) {
        int lo = 0, hi = span - 1;
        while (lo + 1 < hi) {
            const int mid = lo + (hi - lo) / 2;
            if (base(span, mid) <= t)
                lo = mid;
            else
                hi = mid;
        }
        return lo;
    }

    std::pair<int, int> decode(std::uint64_t t) const {
        const int u = first_of(n, t);
        const int v = u + 1 + static_cast<int>(t - base(n, u));
        return {u, v};
    }
};

// Intra-part pairs of a partition, addressed by a flat index: parts are
// laid out consecutively, each one as its own triangular pair block.
struct IntraPairSpace {
    std::vector<std::vector<int>> parts;
    std::vector<std::uint64_t> offsets;

    explicit IntraPairSpace(const Partition& a) : parts(a.members()) {
        offsets.reserve(parts.size() + 1);
        offsets.push_back(0);
        for (const auto& p : parts)
            offsets.push_back(offsets.back() +
                              static_cast<std::uint64_t>(p.size()) * (p.size() - 1) / 2);
    }

    std::uint64_t size() const { return offsets.back(); }

    std::pair<int, int> decode(std::uint64_t t) const {
        const auto it = std::upper_bound(offsets.begin(), offsets.end(), t) - 1;
        const std::size_t p = static_cast<std::size_t>(it - offsets.begin());
        const std::uint64_t local = t - *it;
        const int span = static_cast<int>(parts[p].size());
        const int lu = AllPairSpace::first_of(span, local);
        const int lv = lu + 1 + static_cast<int>(local - AllPairSpace::base(span, lu));
        return {parts[p][lu], parts[p][lv]};
    }
};

// Inter-part pairs of a partition, addressed by a flat index: pairs are
// grouped by their smaller endpoint u, in ascending v order within a group.
struct InterPairSpace {
    int n;
    std::vector<std::vector<int>> parts;
    std::vector<int> part_of;
    std::vector<std::uint64_t> prefix;

    explicit InterPairSpace(const Partition& a)
        : n(a.size()), parts(a.members()), part_of(a.labels()) {
        prefix.assign(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& mem : parts)
            for (std::size_t i = 0; i < mem.size(); ++i) {
                const int u = mem[i];
                const std::uint64_t same_after = mem.size() - 1 - i;
                prefix[u + 1] = static_cast<std::uint64_t>(n - 1 - u) - same_after;
            }
        for (int u = 0; u < n; ++u) prefix[u + 1] += prefix[u];
    }

    std::uint64_t size() const { return prefix[n]; }

    std::pair<int, int> decode(std::uint64_t t) const {
        const auto it = std::upper_bound(prefix.begin(), prefix.end(), t) - 1;
        const int u = static_cast<int>(it - prefix.begin());
        const std::uint64_t r = t - *it;
        const auto& mem = parts[part_of[u]];
        // v is the r-th vertex above u outside u's part; same-part members
        // at or below the running candidate shift it upward.
        int v = u + 1 + static_cast<int>(r);
        for (auto w = std::upper_bound(mem.begin(), mem.end(), u); w != mem.end() && *w <= v; ++w)
            ++v;
        return {u, v};
    }
};

std::vector<std::size_t> dfs_tree(const Graph& g, Rng& rng) {
    const int n = g.vertex_count();
    std::vector<std::size_t> tree;
    if (n <= 1) return tree;

    const int root = rng.below_int(n);
    std::vector<std::vector<Neighbor>> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = g.neighbors(v);
        rng.shuffle(adj[v]);
    }

    std::vector<char> visited(n, 0);
    std::vector<std::pair<int, std::size_t>> stack;
    visited[root] = 1;
    stack.emplace_back(root, 0);
    tree.reserve(static_cast<std::size_t>(n) - 1);
    while (!stack.empty()) {
        auto& [v, pos] = stack.back();
        if (pos >= adj[v].size()) {
            stack.pop_back();
            continue;
        }
        const Neighbor nb = adj[v][pos++];
        if (!visited[nb.vertex]) {
            visited[nb.vertex] = 1;
            tree.push_back(nb.edge);
            stack.emplace_back(nb.vertex, 0);
        }
    }
    if (tree.size() != static_cast<std::size_t>(n) - 1)
        throw std::invalid_argument("graph is disconnected");
    return tree;
}

} // namespace

std::vector<std::uint64_t> sample_distinct(std::uint64_t space, std::uint64_t count, Rng& rng) {
    if (count > space)
        throw std::invalid_argument("cannot sample " + std::to_string(count) +
                                    " distinct values from a space of " + std::to_string(space));
    std::vector<std::uint64_t> out;
    out.reserve(count);
    // Partial Fisher-Yates over a virtual identity array: only displaced
    // entries are materialized.
    std::unordered_map<std::uint64_t, std::uint64_t> replaced;
    const auto fetch = [&replaced](std::uint64_t k) {
        const auto it = replaced.find(k);
        return it == replaced.end() ? k : it->second;
    };
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t j = i + rng.below(space - i);
        const std::uint64_t vi = fetch(i);
        out.push_back(fetch(j));
        replaced[j] = vi;
    }
    return out;
}

std::int64_t PlantedSpec::intra_pairs() const { return intra_pair_count(truth); }

std::int64_t PlantedSpec::inter_pairs() const {
    const std::int64_t n = truth.size();
    return n * (n - 1) / 2 - intra_pairs();
}

double PlantedSpec::intra_density() const {
    const std::int64_t pairs = intra_pairs();
    return pairs == 0 ? 0.0 : static_cast<double>(intra_edges) / static_cast<double>(pairs);
}

double PlantedSpec::inter_density() const {
    const std::int64_t pairs = inter_pairs();
    return pairs == 0 ? 0.0 : static_cast<double>(inter_edges) / static_cast<double>(pairs);
}

void PlantedSpec::validate() const {
    if (intra_edges < 0 || intra_edges > intra_pairs())
        throw std::invalid_argument("intra edge count " + std::to_string(intra_edges) +
                                    " outside [0, " + std::to_string(intra_pairs()) + "]");
    if (inter_edges < 0 || inter_edges > inter_pairs())
        throw std::invalid_argument("inter edge count " + std::to_string(inter_edges) +
                                    " outside [0, " + std::to_string(inter_pairs()) + "]");
}

PlantedSpec PlantedSpec::from_densities(Partition truth, double p, double q) {
    if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("densities must lie in [0, 1]");
    PlantedSpec spec;
    spec.truth = std::move(truth);
    spec.intra_edges = std::llround(p * static_cast<double>(spec.intra_pairs()));
    spec.inter_edges = std::llround(q * static_cast<double>(spec.inter_pairs()));
    spec.validate();
    return spec;
}

Graph planted_partition_graph(const PlantedSpec& spec, Seed seed) {
    spec.validate();
    Rng rng(seed);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(spec.intra_edges + spec.inter_edges));
    const IntraPairSpace intra(spec.truth);
    for (std::uint64_t t : sample_distinct(intra.size(), spec.intra_edges, rng))
        pairs.push_back(intra.decode(t));
    const InterPairSpace inter(spec.truth);
    for (std::uint64_t t : sample_distinct(inter.size(), spec.inter_edges, rng))
        pairs.push_back(inter.decode(t));
    return build_graph(spec.truth.size(), std::move(pairs));
}

Graph erdos_renyi_graph(int n, std::int64_t m, Seed seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    const AllPairSpace space(n);
    if (m < 0 || static_cast<std::uint64_t>(m) > space.size())
        throw std::invalid_argument("edge count " + std::to_string(m) + " outside [0, " +
                                    std::to_string(space.size()) + "]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (std::uint64_t t : sample_distinct(space.size(), static_cast<std::uint64_t>(m), rng))
        pairs.push_back(space.decode(t));
    return build_graph(n, std::move(pairs));
}

Graph random_tree(int n, Seed seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (n <= 1) return build_graph(n, {});
    if (n == 2) return build_graph(2, {{0, 1}});

    Rng rng(seed);
    std::vector<int> seq(static_cast<std::size_t>(n) - 2);
    for (int& x : seq) x = rng.below_int(n);

    // Linear Prüfer decode: repeatedly attach the smallest current leaf.
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        pairs.emplace_back(leaf, x);
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    pairs.emplace_back(leaf, n - 1);
    return build_graph(n, std::move(pairs));
}

std::vector<std::size_t> dfs_spanning_tree(const Graph& g, Seed seed) {
    Rng rng(seed);
    return dfs_tree(g, rng);
}

Partition random_partition_process1(const Graph& g, int k, Seed seed) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("cannot partition an empty vertex set");
    if (k < 1 || k > n)
        throw std::invalid_argument("part count " + std::to_string(k) + " outside [1, " +
                                    std::to_string(n) + "]");
    Rng rng(seed);
    const std::vector<std::size_t> tree = dfs_tree(g, rng);
    std::vector<char> deleted(tree.size(), 0);
    for (std::uint64_t d : sample_distinct(tree.size(), static_cast<std::uint64_t>(k) - 1, rng))
        deleted[d] = 1;
    UnionFind uf(n);
    for (std::size_t i = 0; i < tree.size(); ++i)
        if (!deleted[i]) {
            const Edge& e = g.edge(tree[i]);
            uf.unite(e.u, e.v);
        }
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = uf.find(v);
    return Partition(std::move(labels));
}

Partition random_partition_process2(const Graph& g, std::int64_t k, Seed seed) {
    const std::int64_t m = static_cast<std::int64_t>(g.edge_count());
    if (k < 0 || k > m)
        throw std::invalid_argument("selected edge count " + std::to_string(k) +
                                    " outside [0, " + std::to_string(m) + "]");
    Rng rng(seed);
    EdgeClassification b = EdgeClassification::zeros(g.edge_count());
    for (std::uint64_t i : sample_distinct(static_cast<std::uint64_t>(m),
                                           static_cast<std::uint64_t>(k), rng))
        b.set(i, true);
    return induced_partition(g, b);
}

Partition random_coarsening(const Partition& a, int target_parts, Seed seed) {
    const int k = a.part_count();
    if (target_parts < 1 || target_parts >= k)
        throw std::invalid_argument("coarsening target " + std::to_string(target_parts) +
                                    " outside [1, " + std::to_string(k) + ")");
    Rng rng(seed);
    UnionFind uf(k);
    std::vector<int> alive(k);
    std::iota(alive.begin(), alive.end(), 0);
    while (static_cast<int>(alive.size()) > target_parts) {
        const std::size_t i = static_cast<std::size_t>(rng.below(alive.size()));
        std::size_t j = static_cast<std::size_t>(rng.below(alive.size() - 1));
        if (j >= i) ++j;
        uf.unite(alive[i], alive[j]);
        const std::size_t dead = uf.find(alive[i]) == alive[i] ? j : i;
        alive[dead] = alive.back();
        alive.pop_back();
    }
    std::vector<int> labels(a.size());
    for (int v = 0; v < a.size(); ++v) labels[v] = uf.find(a.label(v));
    return Partition(std::move(labels));
}

Partition random_refinement(const Partition& a, int target_parts, Seed seed) {
    const int n = a.size();
    const int k = a.part_count();
    if (target_parts <= k || target_parts > n)
        throw std::invalid_argument("refinement target " + std::to_string(target_parts) +
                                    " outside (" + std::to_string(k) + ", " +
                                    std::to_string(n) + "]");
    Rng rng(seed);
    std::vector<std::vector<int>> parts = a.members();
    std::vector<std::size_t> splittable;
    while (static_cast<int>(parts.size()) < target_parts) {
        splittable.clear();
        for (std::size_t p = 0; p < parts.size(); ++p)
            if (parts[p].size() >= 2) splittable.push_back(p);
        const std::size_t p = splittable[static_cast<std::size_t>(rng.below(splittable.size()))];
        rng.shuffle(parts[p]);
        const std::size_t half = parts[p].size() / 2;
        parts.emplace_back(parts[p].begin(), parts[p].begin() + half);
        parts[p].erase(parts[p].begin(), parts[p].begin() + half);
    }
    std::vector<int> labels(n);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int v : parts[p]) labels[v] = static_cast<int>(p);
    return Partition(std::move(labels));
}

} // namespace pm
