#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pm/graph.hpp"
#include "pm/mean.hpp"
#include "pm/partition.hpp"
#include "pm/rng.hpp"

namespace pm {

// One aggregated point of a Monte Carlo curve.
struct CurvePoint {
    double x = 0.0;
    std::string measure;
    double mean = 0.0;
    double std_dev = 0.0;
    std::int64_t trials = 0;     // valid trials behind mean/std
    std::int64_t degenerate = 0; // trials whose value was undefined
};

// Names one similarity measure. Ids: agnostic "ri", "ari", "pc_<mean>",
// "ami"; graph-aware "ri_g", "ari_g", "pc_<mean>_g", "apc_<mean>_g" with
// <mean> one of mn, gmn, min, max ("ari_g" coincides with "apc_mn_g").
struct MeasureSelector {
    enum class Kind {
        rand,
        adjusted_rand,
        pair_sim,
        ami,
        graph_rand,
        graph_adjusted_rand,
        graph_pair_sim,
        graph_adjusted_pair_sim,
    };

    Kind kind = Kind::rand;
    MeanKind mean = MeanKind::arithmetic;

    std::string id() const;
    bool graph_aware() const;

    static MeasureSelector parse(const std::string& id);
    // Comma-separated ids; throws std::invalid_argument on unknown ids.
    static std::vector<MeasureSelector> parse_list(const std::string& csv);
    static std::vector<MeasureSelector> all();

    friend bool operator==(const MeasureSelector&, const MeasureSelector&) = default;
};

// Evaluates the selected measure between partitions a and b (the graph is
// only consulted by the graph-aware measures). Propagates
// DegenerateMeasure.
double evaluate_measure(const MeasureSelector& sel, const Graph& g, const Partition& a,
                        const Partition& b);

// Centered moving average with window clamped at the boundaries. The
// window must be a positive odd integer.
std::vector<double> moving_average(const std::vector<double>& series, int window);

struct SweepOptions {
    std::int64_t trials = 1000;
    Seed seed{0};
    int threads = 0; // 0 picks the hardware concurrency
};

// Per-column aggregate of a batch of trials. Degenerate trial values are
// excluded from mean/std and counted separately.
struct ColumnStats {
    double mean = 0.0;
    double std_dev = 0.0;
    double std_error = 0.0;
    std::int64_t valid = 0;
    std::int64_t degenerate = 0;
};

// Runs trial_fn once per trial with the trial's derived sub-seed and
// aggregates each output column. trial_fn must return `columns` values,
// with NaN marking a degenerate entry; it may run on several threads
// concurrently. Results are aggregated by trial index, so they are
// byte-identical for every thread count.
std::vector<ColumnStats> run_trials(std::int64_t trials, std::size_t columns, int threads,
                                    Seed seed,
                                    const std::function<std::vector<double>(Seed)>& trial_fn);

// Mean similarity between a fixed reference partition and random connected
// partitions of the fixed graph, swept over the number of parts. x = part
// count.
std::vector<CurvePoint> baseline_size_sweep(const Graph& g, const Partition& truth,
                                            const std::vector<int>& part_counts,
                                            const std::vector<MeasureSelector>& measures,
                                            const SweepOptions& opt);

// Same baseline but driven by edge selection: random partitions induced by
// k uniformly selected edges, swept over k. x = selected edge count.
std::vector<CurvePoint> baseline_edge_sweep(const Graph& g, const Partition& truth,
                                            const std::vector<std::int64_t>& edge_counts,
                                            const std::vector<MeasureSelector>& measures,
                                            const SweepOptions& opt);

// Sweeps the inter/intra density ratio of a planted-partition model and
// measures random connected partitions (with the truth's part count)
// against the planted truth on each sampled graph. x = q / p. Trials whose
// sampled graph is disconnected are counted as degenerate.
struct StructureSweepConfig {
    Partition truth;
    double intra_density = 0.9;          // p
    std::vector<double> inter_densities; // q values
};

std::vector<CurvePoint> structure_sweep(const StructureSweepConfig& config,
                                        const std::vector<MeasureSelector>& measures,
                                        const SweepOptions& opt);

// Shared configuration for the two expectation checks below: a planted
// truth A with densities (p, q), compared against a random coarsening B1
// (coarse_parts parts) and a random refinement B2 (fine_parts parts).
struct ComparisonSpec {
    Partition truth;
    double intra_density = 0.9; // p
    double inter_density = 0.1; // q
    int coarse_parts = 1;
    int fine_parts = 2;
};

// One side of an expectation check.
struct SideCheck {
    bool applicable = true;
    double mc_mean = 0.0;
    double mc_std = 0.0;
    double std_error = 0.0;
    double reference = 0.0;
    std::int64_t trials = 0;
    std::int64_t degenerate = 0;
    bool pass = true;
};

// Checks the expectation ordering of the edge-wise match ratio against its
// graph-agnostic counterpart on planted graphs:
//   coarse side: E[PC_mn(A, B1; G)] >= PC_mn(A, B1), requires p >= q
//                (marked not applicable otherwise);
//   fine side:   E[PC_mn(A, B2; G)] <= PC_mn(A, B2), any densities.
// Sample means are allowed a 2-standard-error slack on the relevant side.
struct LemmaReport {
    Partition coarser; // B1
    Partition finer;   // B2
    double intra_density = 0.0;
    double inter_density = 0.0;
    SideCheck coarse_side;
    SideCheck fine_side;

    bool passed() const { return coarse_side.pass && fine_side.pass; }
};

LemmaReport lemma_check(const ComparisonSpec& spec, const SweepOptions& opt);

// Checks the ranking reversal between the agnostic and graph-aware match
// ratios. Preconditions (rejected with the failed inequality named):
//   size condition:    |P_A|^2 < |P_B1| * |P_B2|
//   density condition: p > q * (|P_B1| - |P_A|) / (|P_A| - |P_B2|)
// Under them, part (i) PC_mn(A, B1) < PC_mn(A, B2) is deterministic and
// part (ii) E[PC_mn(A, B1; G)] > E[PC_mn(A, B2; G)] is verified on paired
// samples with a 3-standard-error margin.
struct TheoremReport {
    Partition coarser; // B1
    Partition finer;   // B2
    std::int64_t truth_pairs = 0;  // |P_A|
    std::int64_t coarse_pairs = 0; // |P_B1|
    std::int64_t fine_pairs = 0;   // |P_B2|
    double intra_density = 0.0;
    double inter_density = 0.0;
    double density_bound = 0.0; // q * (|P_B1| - |P_A|) / (|P_A| - |P_B2|)
    double agnostic_coarse = 0.0;
    double agnostic_fine = 0.0;
    bool agnostic_ordering = false; // part (i)
    double mc_coarse_mean = 0.0;
    double mc_fine_mean = 0.0;
    double diff_mean = 0.0;
    double diff_std_error = 0.0;
    std::int64_t trials = 0;
    std::int64_t degenerate = 0;
    bool aware_ordering = false; // part (ii)

    bool passed() const { return agnostic_ordering && aware_ordering; }
};

TheoremReport theorem_check(const ComparisonSpec& spec, const SweepOptions& opt);

// Resolution contradiction experiment: on planted graphs, fresh random
// refinements ("finer") and coarsenings ("coarser") of the truth are
// scored per trial; curves are emitted per measure and candidate family
// (measure id suffixed with "_finer" / "_coarser"), and per swept q the
// paired differences decide whether the agnostic adjusted Rand index
// prefers the finer family while the edge-wise one prefers the coarser.
struct ResolutionConfig {
    Partition truth;
    double intra_density = 0.9;          // p
    std::vector<double> inter_densities; // q values
    int fine_parts = 2;
    int coarse_parts = 1;
};

struct ResolutionPoint {
    double inter_density = 0.0;
    double agnostic_diff_mean = 0.0; // ARI(A, finer) - ARI(A, coarser)
    double agnostic_diff_se = 0.0;
    double aware_diff_mean = 0.0; // ARI_G(A, coarser) - ARI_G(A, finer)
    double aware_diff_se = 0.0;
    std::int64_t trials = 0;
    std::int64_t degenerate = 0;
    bool agnostic_prefers_finer = false;
    bool aware_prefers_coarser = false;

    bool contradiction() const { return agnostic_prefers_finer && aware_prefers_coarser; }
};

struct ResolutionReport {
    std::vector<CurvePoint> curves;
    std::vector<ResolutionPoint> points;

    bool contradiction_everywhere() const;
};

// Default measures: ari, ami, ari_g.
ResolutionReport resolution_experiment(const ResolutionConfig& config,
                                       const std::vector<MeasureSelector>& measures,
                                       const SweepOptions& opt);

} // namespace pm
